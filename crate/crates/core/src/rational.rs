use core::cmp::Ordering;
use core::fmt;

/// An exact rational in lowest terms with a positive denominator.
///
/// Bound values never leave the range of small integers here, but all
/// comparisons go through `i128` cross-multiplication anyway so no
/// intermediate can overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    numerator: i64,
    denominator: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    /// Construct `numerator / denominator` reduced to lowest terms.
    ///
    /// Panics if `denominator == 0`.
    pub fn new(numerator: i64, denominator: i64) -> Rational {
        assert!(denominator != 0, "zero denominator");
        let sign = if denominator < 0 { -1 } else { 1 };
        let g = gcd(numerator, denominator).max(1);
        Rational {
            numerator: sign * numerator / g,
            denominator: sign * denominator / g,
        }
    }

    pub fn from_integer(value: i64) -> Rational {
        Rational { numerator: value, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.numerator)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        let num = (self.numerator as i128) * (other.denominator as i128)
            - (other.numerator as i128) * (self.denominator as i128);
        let den = (self.denominator as i128) * (other.denominator as i128);
        let g = gcd128(num, den).max(1);
        let (num, den) = (num / g, den / g);
        debug_assert!(i64::try_from(num).is_ok() && i64::try_from(den).is_ok());
        Rational::new(num as i64, den as i64)
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        let lhs = (self.numerator as i128) * (other.denominator as i128);
        let rhs = (other.numerator as i128) * (self.denominator as i128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    /// Always renders as `p/q`, reduced, so equality claims stay auditable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(10, 6);
        assert_eq!((r.numerator(), r.denominator()), (5, 3));
        let r = Rational::new(-4, -8);
        assert_eq!((r.numerator(), r.denominator()), (1, 2));
        let r = Rational::new(3, -9);
        assert_eq!((r.numerator(), r.denominator()), (-1, 3));
    }

    #[test]
    fn ordering_is_cross_multiplied() {
        assert!(Rational::new(10, 3) > Rational::from_integer(3));
        assert!(Rational::new(5, 3) < Rational::from_integer(2));
        assert_eq!(Rational::new(6, 6), Rational::from_integer(1));
    }

    #[test]
    fn displays_as_reduced_fraction() {
        assert_eq!(alloc::format!("{}", Rational::new(4, 4)), "1/1");
        assert_eq!(alloc::format!("{}", Rational::new(10, 3)), "10/3");
    }

    #[test]
    fn subtraction_gap() {
        let gap = Rational::new(7, 3).sub(&Rational::from_integer(2));
        assert_eq!(gap, Rational::new(1, 3));
    }
}
