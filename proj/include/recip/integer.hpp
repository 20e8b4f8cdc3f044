#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace recip {

using Rng = std::mt19937_64;

// Deterministic trial division; inputs are desk-scale.
bool is_prime(long n);

mpz_class ipow(long base, unsigned long exp);

// Least nonnegative residue.
mpz_class mod(const mpz_class& x, const mpz_class& m);
long mod(long x, long m);

// p-adic valuation of a nonzero integer.
long val_p(const mpz_class& x, long p);

long powmod(long base, long exp, long m);
long inverse_mod(long a, long m);

// Legendre symbol by Euler's criterion; p odd prime, returns 0 when p | a.
int legendre(const mpz_class& a, long p);

// Prime factorisation |n| = prod p^k, primes ascending. n != 0.
std::vector<std::pair<long, int>> factor(const mpz_class& n);

std::vector<long> primes_below(long bound);

// Uniform-ish integer in [0, bound) built from 64-bit draws.
mpz_class random_below(Rng& rng, const mpz_class& bound);

long floor_rational(const mpq_class& x);

}  // namespace recip
