#include "unipart/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace unipart {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_real(const std::string& tok, int line_no) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError(line_no, "bad coefficient '" + tok + "'");
    return v;
}

// Chemistry dumps often write `(a+bj)`. Real values in that syntax pass
// through; anything with a nonzero imaginary part is rejected.
double parse_coefficient(const std::string& tok, int line_no) {
    if (tok.empty()) throw ParseError(line_no, "missing coefficient");
    if (tok.front() == '(' || tok.back() == 'j' || tok.back() == 'J') {
        std::string body = tok;
        if (body.front() == '(') {
            if (body.back() != ')') throw ParseError(line_no, "unbalanced parentheses in coefficient '" + tok + "'");
            body = body.substr(1, body.size() - 2);
        }
        if (body.empty() || (body.back() != 'j' && body.back() != 'J'))
            return parse_real(body, line_no);
        body.pop_back();
        // Split real and imaginary at the last +/- that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        double re = 0.0, im = 0.0;
        if (split == std::string::npos) {
            im = body.empty() || body == "+" || body == "-" ? parse_real(body + "1", line_no)
                                                            : parse_real(body, line_no);
        } else {
            re = parse_real(body.substr(0, split), line_no);
            std::string imag = body.substr(split);
            if (imag == "+" || imag == "-") imag += "1";
            im = parse_real(imag, line_no);
        }
        if (im != 0.0)
            throw ParseError(line_no, "complex coefficient '" + tok + "' is unsupported");
        return re;
    }
    return parse_real(tok, line_no);
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

QubitHamiltonian parse_hamiltonian(const std::string& text) {
    struct RawTerm {
        int line_no;
        double coefficient;
        std::string factors;
    };
    std::vector<RawTerm> raw;
    double offset = 0.0;
    long header_qubits = -1;
    std::size_t max_index = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (body.rfind("qubits:", 0) == 0) {
            if (header_qubits >= 0) throw ParseError(line_no, "duplicate qubits header");
            const std::string rest = trim(body.substr(7));
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError(line_no, "bad qubit count '" + rest + "'");
            header_qubits = std::stol(rest);
            if (header_qubits <= 0) throw ParseError(line_no, "qubit count must be positive");
            continue;
        }
        const std::size_t open = body.find('[');
        if (open == std::string::npos) throw ParseError(line_no, "expected '[' after coefficient");
        const std::size_t close = body.find(']', open);
        if (close == std::string::npos) throw ParseError(line_no, "missing ']'");
        if (!trim(body.substr(close + 1)).empty())
            throw ParseError(line_no, "trailing text after ']'");
        const double coeff = parse_coefficient(trim(body.substr(0, open)), line_no);
        const std::string factors = trim(body.substr(open + 1, close - open - 1));
        if (factors.empty()) {
            offset += coeff;
            continue;
        }
        // Dry run with unconstrained width to learn the max index and to
        // surface malformed factors with this line number.
        const PauliWord probe = parse_factors(factors, 0, line_no);
        max_index = std::max(max_index, probe.n_qubits());
        raw.push_back({line_no, coeff, factors});
    }

    QubitHamiltonian h;
    if (header_qubits >= 0) {
        h.n_qubits = static_cast<std::size_t>(header_qubits);
        if (max_index > h.n_qubits)
            throw ParseError(0, "term uses qubit index beyond declared qubit count " +
                                    std::to_string(header_qubits));
    } else {
        h.n_qubits = max_index ? max_index : 1;
    }
    h.identity_offset = offset;
    h.terms.reserve(raw.size());
    for (const auto& t : raw)
        h.terms.push_back({t.coefficient, parse_factors(t.factors, h.n_qubits, t.line_no)});
    return h;
}

QubitHamiltonian load_hamiltonian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hamiltonian(buf.str());
}

QubitHamiltonian canonicalize(const QubitHamiltonian& h, double prune_threshold) {
    std::vector<HamiltonianTerm> terms;
    terms.reserve(h.terms.size());
    double offset = h.identity_offset;
    for (const auto& t : h.terms) {
        if (t.word.n_qubits() != h.n_qubits)
            throw DimensionError("term width does not match Hamiltonian qubit count");
        if (t.word.is_identity()) {
            offset += t.coefficient;
        } else {
            terms.push_back(t);
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const HamiltonianTerm& a, const HamiltonianTerm& b) { return a.word < b.word; });
    QubitHamiltonian out;
    out.n_qubits = h.n_qubits;
    out.identity_offset = offset;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().word == t.word) {
            out.terms.back().coefficient += t.coefficient;
        } else {
            out.terms.push_back(t);
        }
    }
    std::erase_if(out.terms,
                  [prune_threshold](const HamiltonianTerm& t) { return std::abs(t.coefficient) < prune_threshold; });
    return out;
}

std::string serialize_hamiltonian(const QubitHamiltonian& h) {
    std::string out = "qubits: " + std::to_string(h.n_qubits) + "\n";
    if (h.identity_offset != 0.0) out += format_real(h.identity_offset) + " []\n";
    for (const auto& t : h.terms) out += format_real(t.coefficient) + " [" + t.word.str() + "]\n";
    return out;
}

void save_hamiltonian(const QubitHamiltonian& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write '" + path + "'");
    out << serialize_hamiltonian(h);
}

}  // namespace unipart
