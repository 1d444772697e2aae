#ifndef REGPOW_ORDER_HPP
#define REGPOW_ORDER_HPP

#include <string>

#include "regpow/monomial.hpp"

namespace regpow {

class Ring;

// Total monomial orders refining divisibility. block_elim compares the front
// block of variables first (graded reverse-lex within each block), so it
// eliminates exactly the first `front` variables.
struct OrderSpec {
    enum class Kind { grevlex, lex, block_elim, bigraded_grevlex };
    Kind kind = Kind::grevlex;
    int front = 0;  // block_elim only

    static OrderSpec grevlex() { return {Kind::grevlex, 0}; }
    static OrderSpec lex() { return {Kind::lex, 0}; }
    static OrderSpec block_elim(int front) { return {Kind::block_elim, front}; }
    static OrderSpec bigraded_grevlex() { return {Kind::bigraded_grevlex, 0}; }

    bool operator==(const OrderSpec& o) const { return kind == o.kind && front == o.front; }
    std::string str() const;
};

// Returns -1, 0, +1 for a < b, a = b, a > b.
int cmp_mono(const Ring& ring, const OrderSpec& order, const Monomial& a, const Monomial& b);
int cmp_mono(const Ring& ring, const Monomial& a, const Monomial& b);  // ring's own order

}  // namespace regpow

#endif
