#include "pretzel/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pretzel {

PretzelDiagram::PretzelDiagram(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("pretzel diagram needs at least one entry");
}

PretzelDiagram PretzelDiagram::parse(const std::string& text) {
    std::vector<int> entries;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad entry '" + tok + "' in diagram '" + text + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad entry '" + tok + "' in diagram '" + text + "'");
        entries.push_back(v);
    }
    if (entries.empty())
        throw std::invalid_argument("empty diagram '" + text + "'");
    return PretzelDiagram(std::move(entries));
}

std::string PretzelDiagram::str() const { return "(" + entry_str() + ")"; }

std::string PretzelDiagram::entry_str() const {
    std::ostringstream out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ",";
        out << entries_[i];
    }
    return out.str();
}

DiagramParams params(const PretzelDiagram& P) {
    DiagramParams p;
    for (int a : P.entries()) {
        if (a > 1) ++p.r;
        else if (a < -1) ++p.s;
        else if (a == 0) ++p.z;
        else if (a == 1) ++p.alpha;
        else ++p.beta;
        const int m = a < 0 ? -a : a;
        if (m > 1) {
            p.Sigma += m;
            if (!p.M || m < *p.M) p.M = m;
        }
    }
    p.lambda = p.alpha - p.beta;
    return p;
}

bool is_reduced(const PretzelDiagram& P) {
    const auto& e = P.entries();
    if (e.size() == 2 && ((e[0] == 1 && e[1] == -1) || (e[0] == -1 && e[1] == 1)))
        return true;
    const DiagramParams p = params(P);
    if (p.alpha > 0 && p.beta > 0) return false;
    if (p.z != 0 && (p.alpha > 0 || p.beta > 0)) return false;
    return true;
}

namespace {

void erase_one(std::vector<int>& v, int value) {
    v.erase(std::find(v.begin(), v.end(), value));
}

}  // namespace

PretzelDiagram reduce(const PretzelDiagram& P) {
    std::vector<int> e = P.entries();
    auto current = [&]() { return PretzelDiagram(e); };
    while (!e.empty() && !is_reduced(current())) {
        const DiagramParams p = params(current());
        if (p.alpha > 0 && p.beta > 0) {
            erase_one(e, 1);
            erase_one(e, -1);
        } else {
            // a zero entry absorbs any single +-1 column
            erase_one(e, p.alpha > 0 ? 1 : -1);
        }
    }
    if (e.empty()) e.push_back(0);
    return PretzelDiagram(std::move(e));
}

PretzelDiagram sort_desc(const PretzelDiagram& P) {
    std::vector<int> e = P.entries();
    std::sort(e.begin(), e.end(), std::greater<int>());
    return PretzelDiagram(std::move(e));
}

PretzelDiagram mirror(const PretzelDiagram& P) {
    std::vector<int> e = P.entries();
    for (int& a : e) a = -a;
    return PretzelDiagram(std::move(e));
}

PretzelDiagram canonical(const PretzelDiagram& P) {
    PretzelDiagram a = sort_desc(P);
    PretzelDiagram b = sort_desc(mirror(P));
    return b < a ? a : b;
}

bool is_knot(const PretzelDiagram& P) {
    int even = 0;
    for (int a : P.entries())
        if (a % 2 == 0) ++even;
    if (even == 1) return true;
    return even == 0 && P.size() % 2 == 1;
}

}  // namespace pretzel
