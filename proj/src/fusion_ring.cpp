#include "potts/fusion/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace potts::fusion {

std::string Label::display() const {
    if (flavor == 0) return name;
    std::string base = name;
    // "W(2/3)" + flavor -> "W(2/3,+)"
    if (!base.empty() && base.back() == ')') {
        base.pop_back();
        base += flavor > 0 ? ",+)" : ",-)";
        return base;
    }
    return base + (flavor > 0 ? "+" : "-");
}

FusionRing::FusionRing(std::string name, std::vector<Label> basis, std::size_t identity,
                       std::vector<std::size_t> dual, std::vector<int> table)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      identity_(identity),
      dual_(std::move(dual)),
      table_(std::move(table)) {
    const std::size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("fusion ring needs a nonempty basis");
    if (identity_ >= n) throw std::invalid_argument("identity index out of range");
    if (dual_.size() != n || table_.size() != n * n * n)
        throw std::invalid_argument("fusion ring shape mismatch");
    if (dual_[identity_] != identity_)
        throw std::invalid_argument("dual must fix the identity");
    for (std::size_t i = 0; i < n; ++i) {
        if (dual_[i] >= n || dual_[dual_[i]] != i)
            throw std::invalid_argument("dual must be an involutive permutation");
        for (std::size_t k = 0; k < n; ++k) {
            const int expected = (i == k) ? 1 : 0;
            if (N(identity_, i, k) != expected || N(i, identity_, k) != expected)
                throw std::invalid_argument("identity row violated");
        }
    }
    for (int v : table_)
        if (v < 0) throw std::invalid_argument("structure constants must be nonnegative");
}

std::size_t FusionRing::flat(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = basis_.size();
    return (i * n + j) * n + k;
}

int FusionRing::N(std::size_t i, std::size_t j, std::size_t k) const {
    return table_.at(flat(i, j, k));
}

std::vector<std::pair<std::size_t, int>> FusionRing::multiply(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("label index out of range");
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t k = 0; k < size(); ++k)
        if (int m = N(i, j, k); m > 0) out.emplace_back(k, m);
    return out;
}

std::size_t FusionRing::index_of(const std::string& display_name) const {
    if (auto i = find(display_name)) return *i;
    throw std::out_of_range("unknown label '" + display_name + "' in ring " + name_);
}

std::optional<std::size_t> FusionRing::find(const std::string& display_name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].display() == display_name) return i;
    return std::nullopt;
}

AxiomReport FusionRing::check_axioms() const {
    AxiomReport rep;
    const std::size_t n = size();
    auto witness3 = [&](std::size_t i, std::size_t j, std::size_t k) {
        return "(" + basis_[i].display() + ", " + basis_[j].display() + ", " +
               basis_[k].display() + ")";
    };

    AxiomResult identity{"identity", true, ""};
    for (std::size_t j = 0; j < n && identity.pass; ++j)
        for (std::size_t k = 0; k < n && identity.pass; ++k)
            if (N(identity_, j, k) != (j == k ? 1 : 0))
                identity = {"identity", false, witness3(identity_, j, k)};
    rep.results.push_back(identity);

    AxiomResult comm{"commutativity", true, ""};
    for (std::size_t i = 0; i < n && comm.pass; ++i)
        for (std::size_t j = 0; j < n && comm.pass; ++j)
            for (std::size_t k = 0; k < n && comm.pass; ++k)
                if (N(i, j, k) != N(j, i, k)) comm = {"commutativity", false, witness3(i, j, k)};
    rep.results.push_back(comm);

    // Frobenius reciprocity: N^k_{ij} = N^{dual(i)}_{j, dual(k)}.
    AxiomResult frob{"frobenius", true, ""};
    for (std::size_t i = 0; i < n && frob.pass; ++i)
        for (std::size_t j = 0; j < n && frob.pass; ++j)
            for (std::size_t k = 0; k < n && frob.pass; ++k)
                if (N(i, j, k) != N(j, dual_[k], dual_[i]))
                    frob = {"frobenius", false, witness3(i, j, k)};
    rep.results.push_back(frob);

    AxiomResult assoc{"associativity", true, ""};
    for (std::size_t i = 0; i < n && assoc.pass; ++i)
        for (std::size_t j = 0; j < n && assoc.pass; ++j)
            for (std::size_t k = 0; k < n && assoc.pass; ++k)
                for (std::size_t l = 0; l < n && assoc.pass; ++l) {
                    long lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += static_cast<long>(N(i, j, m)) * N(m, k, l);
                        rhs += static_cast<long>(N(j, k, m)) * N(i, m, l);
                    }
                    if (lhs != rhs)
                        assoc = {"associativity", false,
                                 witness3(i, j, k) + " -> " + basis_[l].display()};
                }
    rep.results.push_back(assoc);
    return rep;
}

std::string FusionRing::serialize() const {
    std::ostringstream os;
    os << "ring " << name_ << "\n";
    for (const auto& l : basis_) {
        os << "label " << l.name << " " << to_string(l.weight) << " "
           << (l.flavor > 0 ? "+" : l.flavor < 0 ? "-" : "none") << "\n";
    }
    os << "identity " << identity_ << "\n";
    os << "dual";
    for (auto d : dual_) os << " " << d;
    os << "\n";
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const auto prod = multiply(i, j);
            if (prod.empty()) continue;
            os << "fuse " << i << " " << j << " ->";
            bool first = true;
            for (const auto& [k, m] : prod) {
                os << (first ? " " : " + ") << k << "*" << m;
                first = false;
            }
            os << "\n";
        }
    }
    return os.str();
}

FusionRing FusionRing::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name;
    std::vector<Label> basis;
    std::size_t identity = 0;
    std::vector<std::size_t> dual;
    struct FuseLine {
        std::size_t i, j;
        std::vector<std::pair<std::size_t, int>> out;
    };
    std::vector<FuseLine> fuses;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "ring") {
            ls >> name;
        } else if (head == "label") {
            std::string lname, weight, flavor;
            ls >> lname >> weight >> flavor;
            int f = flavor == "+" ? 1 : flavor == "-" ? -1 : 0;
            basis.push_back({lname, parse_rational(weight), f});
        } else if (head == "identity") {
            ls >> identity;
        } else if (head == "dual") {
            std::size_t d;
            while (ls >> d) dual.push_back(d);
        } else if (head == "fuse") {
            FuseLine f;
            std::string arrow;
            ls >> f.i >> f.j >> arrow;
            if (arrow != "->") throw std::invalid_argument("malformed fuse line: " + line);
            std::string tok;
            while (ls >> tok) {
                if (tok == "+") continue;
                auto star = tok.find('*');
                if (star == std::string::npos)
                    throw std::invalid_argument("malformed fuse term: " + tok);
                f.out.emplace_back(std::stoul(tok.substr(0, star)),
                                   std::stoi(tok.substr(star + 1)));
            }
            fuses.push_back(std::move(f));
        } else {
            throw std::invalid_argument("unknown serialization line: " + line);
        }
    }
    const std::size_t n = basis.size();
    std::vector<int> table(n * n * n, 0);
    auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t j = 0; j < n; ++j) {
        table[flat(identity, j, j)] = 1;
        table[flat(j, identity, j)] = 1;
    }
    for (const auto& f : fuses) {
        for (const auto& [k, m] : f.out) {
            table[flat(f.i, f.j, k)] = m;
            table[flat(f.j, f.i, k)] = m;
        }
    }
    return FusionRing(name, std::move(basis), identity, std::move(dual), std::move(table));
}

FusionRing FusionRing::with_constant(std::size_t i, std::size_t j, std::size_t k, int value) const {
    FusionRing copy(*this);
    copy.table_[flat(i, j, k)] = value;
    return copy;
}

bool FusionRing::same_table(const FusionRing& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (!(basis_[i] == other.basis_[i])) return false;
    return identity_ == other.identity_ && dual_ == other.dual_ && table_ == other.table_;
}

}  // namespace potts::fusion
