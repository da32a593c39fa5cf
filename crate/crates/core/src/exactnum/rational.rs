use num_bigint::BigInt;
use num_traits::One;

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for a small rational literal.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}
