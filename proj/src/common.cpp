#include "mono/common.hpp"

namespace mono {

bool is_prime(const Int& p)
{
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

Int s_free_part(const Int& x, const std::vector<Int>& S)
{
    if (x == 0) return x;
    Int r = x;
    for (const Int& p : S) {
        while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()))
            mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    }
    return r;
}

Rat s_free_part(const Rat& x, const std::vector<Int>& S)
{
    Rat r(s_free_part(Int(x.get_num()), S), s_free_part(Int(x.get_den()), S));
    r.canonicalize();
    return r;
}

Rng::Rng(std::uint64_t seed)
{
    // splitmix64 expansion of the seed
    std::uint64_t z = seed;
    for (int i = 0; i < 4; i++) {
        z += 0x9e3779b97f4a7c15ull;
        std::uint64_t t = z;
        t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ull;
        t = (t ^ (t >> 27)) * 0x94d049bb133111ebull;
        s_[i] = t ^ (t >> 31);
    }
}

static inline std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

std::uint64_t Rng::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t n)
{
    return n == 0 ? 0 : next() % n;
}

long Rng::range(long lo, long hi)
{
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace mono
