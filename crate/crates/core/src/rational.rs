//! Exact non-negative rationals with an infinity marker.
//!
//! Toughness values must compare exactly (2/3 is not 0.666...), and complete
//! graphs carry infinite toughness, so floating point is banned from every
//! invariant computation.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite { num: u64, den: u64 },
    Infinity,
}

impl Rational {
    pub const ZERO: Rational = Rational::Finite { num: 0, den: 1 };
    pub const ONE: Rational = Rational::Finite { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Rational {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Rational::Finite {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(k: u64) -> Rational {
        Rational::Finite { num: k, den: 1 }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Rational::Infinity)
    }

    /// Exact comparison `self * s > k` without constructing intermediates;
    /// used by the toughness pruner. Infinity times a positive count beats
    /// any finite bound.
    pub(crate) fn times_exceeds(self, s: u64, k: u64) -> bool {
        match self {
            Rational::Infinity => s > 0,
            Rational::Finite { num, den } => {
                (num as u128) * (s as u128) > (k as u128) * (den as u128)
            }
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
            (Rational::Infinity, _) => Ordering::Greater,
            (_, Rational::Infinity) => Ordering::Less,
            (Rational::Finite { num: a, den: b }, Rational::Finite { num: c, den: d }) => {
                ((*a as u128) * (*d as u128)).cmp(&((*c as u128) * (*b as u128)))
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Infinity => write!(f, "inf"),
            Rational::Finite { num, den: 1 } => write!(f, "{num}"),
            Rational::Finite { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_equality() {
        assert_eq!(Rational::new(4, 6), Rational::new(2, 3));
        assert_eq!(Rational::new(0, 5), Rational::ZERO);
        assert_eq!(Rational::new(7, 7), Rational::ONE);
        assert_ne!(Rational::new(2, 3), Rational::new(3, 4));
    }

    #[test]
    fn ordering_with_infinity() {
        assert!(Rational::Infinity > Rational::new(1000, 1));
        assert!(Rational::new(2, 3) < Rational::ONE);
        assert!(Rational::new(4, 3) > Rational::ONE);
        assert_eq!(Rational::Infinity, Rational::Infinity);
        let mut vals = vec![
            Rational::Infinity,
            Rational::new(2, 3),
            Rational::ZERO,
            Rational::new(4, 3),
        ];
        vals.sort();
        assert_eq!(
            vals,
            vec![
                Rational::ZERO,
                Rational::new(2, 3),
                Rational::new(4, 3),
                Rational::Infinity
            ]
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(Rational::new(2, 3).to_string(), "2/3");
        assert_eq!(Rational::ONE.to_string(), "1");
        assert_eq!(Rational::Infinity.to_string(), "inf");
        assert_eq!(Rational::new(4, 3).to_string(), "4/3");
    }

    #[test]
    fn scaled_comparison() {
        // 2/3 * 3 > 1, but 2/3 * 3 > 2 is false
        assert!(Rational::new(2, 3).times_exceeds(3, 1));
        assert!(!Rational::new(2, 3).times_exceeds(3, 2));
        assert!(Rational::Infinity.times_exceeds(1, u64::MAX));
        assert!(!Rational::Infinity.times_exceeds(0, 0));
    }
}
