#pragma once

#include <cstdint>
#include <stdexcept>

namespace modhom {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Integer residue with an explicit prime modulus. All congruence results
// flow through this type.
class Residue {
public:
    Residue(std::uint64_t value, std::uint64_t modulus) : modulus_(modulus) {
        if (!is_prime(modulus)) throw std::invalid_argument("modulus must be prime");
        value_ = value % modulus;
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    Residue operator+(const Residue& o) const {
        check(o);
        return Residue((value_ + o.value_) % modulus_, modulus_);
    }
    Residue operator*(const Residue& o) const {
        check(o);
        return Residue((value_ * o.value_) % modulus_, modulus_);
    }
    Residue pow(std::uint64_t e) const {
        std::uint64_t base = value_, acc = 1 % modulus_;
        while (e > 0) {
            if (e & 1) acc = acc * base % modulus_;
            base = base * base % modulus_;
            e >>= 1;
        }
        return Residue(acc, modulus_);
    }

    bool operator==(const Residue&) const = default;

private:
    void check(const Residue& o) const {
        if (modulus_ != o.modulus_)
            throw std::invalid_argument("mismatched moduli");
    }

    std::uint64_t value_;
    std::uint64_t modulus_;
};

}  // namespace modhom
