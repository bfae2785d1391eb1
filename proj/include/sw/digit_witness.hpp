#pragma once

#include "sw/tame_types.hpp"
#include "sw/weight_lattice.hpp"

#include <optional>
#include <vector>

namespace sw {

struct DigitWitness {
    int d = 1;
    int f = 1;
    int p = 2;
    Row x;                 // d*f entries, sum x_i p^i = N mod p^{df} - 1
    std::vector<Row> chains;  // per residue class mod f, decreasing
};

bool is_excluded_class(int d, int f, int p, const BigInt& N);
DigitWitness construct(int d, int f, int p, const BigInt& N);  // throws ExcludedClass
bool verify(const DigitWitness& w, const BigInt& N);

// Reachability of residues by chain-structured digit vectors. Adding a constant
// to one residue class moves N by a multiple of R = (p^{df}-1)/(p^f-1), so it
// suffices to know which residues mod R the zero-based chains reach.
class ChainResidues {
public:
    ChainResidues(int d, int f, int p);
    bool reachable(const BigInt& N) const;
    const BigInt& modulus() const { return r_; }

private:
    BigInt r_;
    std::vector<bool> hit_;
};

bool brute_force_exists(int d, int f, int p, const BigInt& N);

// One inductive block of an obvious lift: Ind from K_d of a crystalline
// character with labelled weights lambda (e*f*d entries).
struct ObviousBlock {
    int d = 1;
    Row lambda;
};

struct ObviousWitness {
    SerreWeight weight;
    HodgeType lift;
    std::vector<ObviousBlock> blocks;
};

ObviousWitness obvious_witness(const TameType& t);
bool verify_obvious_witness(const TameType& t, const ObviousWitness& w);

}  // namespace sw
