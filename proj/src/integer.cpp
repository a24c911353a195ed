#include "toribord/integer.hpp"


namespace toribord {

IntMatrix columns_matrix(std::span<const IntVec> vectors, Index n)
{
    IntMatrix m(n, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != n)
            throw DimensionMismatch("vector " + std::to_string(j) + " has length " + std::to_string(vectors[j].size()) +
                                    ", expected " + std::to_string(n));
        m.col(static_cast<Index>(j)) = vectors[j];
    }
    return m;
}

bool is_unimodular_set_z(std::span<const IntVec> vectors)
{
    if (vectors.empty()) return true;
    return is_unimodular_columns(columns_matrix(vectors, vectors.front().size()));
}

Integer content(const IntVec& v)
{
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return abs(g);
}

IntVec int_vec(std::initializer_list<long> entries)
{
    IntVec v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (long e : entries) v(i++) = e;
    return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c) throw DimensionMismatch("ragged matrix literal");
        Index j = 0;
        for (long e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

std::string to_string(const IntVec& v)
{
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v(i).str();
    }
    return out;
}

IntVec parse_int_vec(std::string_view text)
{
    std::vector<Integer> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, comma - pos);
        std::size_t k = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
        if (k == tok.size()) throw ParseError("bad integer vector '" + std::string(text) + "'");
        for (std::size_t q = k; q < tok.size(); ++q)
            if (tok[q] < '0' || tok[q] > '9') throw ParseError("bad integer vector '" + std::string(text) + "'");
        entries.emplace_back(std::string(tok[0] == '+' ? tok.substr(1) : tok));
        pos = comma + 1;
    }
    IntVec v(static_cast<Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Index>(i)) = entries[i];
    return v;
}

} // namespace toribord
