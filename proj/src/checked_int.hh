#ifndef SUBISO_SRC_CHECKED_INT_HH
#define SUBISO_SRC_CHECKED_INT_HH 1

#include <subiso/rational.hh>

#include <compare>
#include <cstdint>
#include <numeric>

namespace subiso
{
    /// Thrown by CheckedInt when a result would not fit in 64 bits.
    struct CheckedIntOverflow
    {
    };

    /// 64-bit integer whose arithmetic throws CheckedIntOverflow instead of
    /// wrapping, so a computation either finishes exactly or tells the caller
    /// to redo it with GMP integers. The most negative value is excluded so
    /// negation and absolute value are always safe.
    class CheckedInt
    {
        private:
            std::int64_t _v = 0;

            [[noreturn]] static auto overflow() -> void
            {
                throw CheckedIntOverflow{};
            }

            static auto checked(std::int64_t v) -> CheckedInt
            {
                if (v == INT64_MIN)
                    overflow();
                CheckedInt r;
                r._v = v;
                return r;
            }

        public:
            CheckedInt() = default;

            CheckedInt(int v) :
                _v(v)
            {
            }

            explicit CheckedInt(const mpz_class & z)
            {
                if (! mpz_fits_slong_p(z.get_mpz_t()))
                    overflow();
                _v = mpz_get_si(z.get_mpz_t());
                if (_v == INT64_MIN)
                    overflow();
            }

            auto get() const -> std::int64_t
            {
                return _v;
            }

            auto to_mpz() const -> mpz_class
            {
                mpz_class z;
                mpz_set_si(z.get_mpz_t(), _v);
                return z;
            }

            auto operator- () const -> CheckedInt
            {
                CheckedInt r;
                r._v = -_v;
                return r;
            }

            friend auto operator+ (CheckedInt a, CheckedInt b) -> CheckedInt
            {
                std::int64_t r;
                if (__builtin_add_overflow(a._v, b._v, &r))
                    overflow();
                return checked(r);
            }

            friend auto operator- (CheckedInt a, CheckedInt b) -> CheckedInt
            {
                std::int64_t r;
                if (__builtin_sub_overflow(a._v, b._v, &r))
                    overflow();
                return checked(r);
            }

            friend auto operator* (CheckedInt a, CheckedInt b) -> CheckedInt
            {
                std::int64_t r;
                if (__builtin_mul_overflow(a._v, b._v, &r))
                    overflow();
                return checked(r);
            }

            /// Exact division.
            friend auto operator/ (CheckedInt a, CheckedInt b) -> CheckedInt
            {
                CheckedInt r;
                r._v = a._v / b._v;
                return r;
            }

            auto operator/= (CheckedInt b) -> CheckedInt &
            {
                _v /= b._v;
                return *this;
            }

            friend auto operator== (CheckedInt a, CheckedInt b) -> bool = default;
            friend auto operator<=> (CheckedInt a, CheckedInt b) -> std::strong_ordering = default;

            friend auto gcd(CheckedInt a, CheckedInt b) -> CheckedInt
            {
                CheckedInt r;
                r._v = std::gcd(a._v, b._v);
                return r;
            }

            friend auto abs(CheckedInt a) -> CheckedInt
            {
                return a._v < 0 ? -a : a;
            }

            /// a / b < c / d for positive b and d, without overflow.
            friend auto fraction_less(CheckedInt a, CheckedInt b, CheckedInt c, CheckedInt d) -> bool
            {
                return static_cast<__int128>(a._v) * d._v < static_cast<__int128>(c._v) * b._v;
            }

            /// a / b == c / d for positive b and d.
            friend auto fraction_equal(CheckedInt a, CheckedInt b, CheckedInt c, CheckedInt d) -> bool
            {
                return static_cast<__int128>(a._v) * d._v == static_cast<__int128>(c._v) * b._v;
            }
    };

    inline auto to_mpz(const CheckedInt & z) -> mpz_class
    {
        return z.to_mpz();
    }

    inline auto to_mpz(const mpz_class & z) -> const mpz_class &
    {
        return z;
    }

    inline auto fraction_less(const mpz_class & a, const mpz_class & b, const mpz_class & c, const mpz_class & d) -> bool
    {
        return a * d < c * b;
    }

    inline auto fraction_equal(const mpz_class & a, const mpz_class & b, const mpz_class & c, const mpz_class & d) -> bool
    {
        return a * d == c * b;
    }
}

#endif
