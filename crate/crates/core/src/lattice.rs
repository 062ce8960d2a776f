//! The character lattice `X(T) = Z^l`, the cocharacter lattice and their pairing.
//!
//! Weights are dense coordinate vectors in the basis `lambda_1, ..., lambda_l`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg;
use crate::{Error, Result};

/// An element of `X(T)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<BigInt>);

/// An element of the cocharacter lattice `X(T)^∨`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(Vec<BigInt>);

macro_rules! lattice_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(coords: Vec<BigInt>) -> Self {
                $name(coords)
            }

            pub fn from_i64s(coords: &[i64]) -> Self {
                $name(coords.iter().map(|&c| BigInt::from(c)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                $name(alloc::vec![BigInt::zero(); rank])
            }

            /// The `i`-th basis vector (0-based).
            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i] = BigInt::one();
                v
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<BigInt> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, k: &BigInt) -> Self {
                $name(self.0.iter().map(|c| c * k).collect())
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                check_rank(self.rank(), other.rank())?;
                Ok(self + other)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                assert_eq!(self.rank(), rhs.rank(), "lattice rank mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                assert_eq!(self.rank(), rhs.rank(), "lattice rank mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    };
}

lattice_vector!(Weight);
lattice_vector!(Coweight);

impl Weight {
    /// The weight with the same coordinates, read as a cocharacter.
    pub fn to_coweight(&self) -> Coweight {
        Coweight(self.0.clone())
    }
}

pub(crate) fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

/// The perfect pairing `X(T) × X(T)^∨ → Z`.
pub fn pair(lambda: &Weight, cov: &Coweight) -> Result<BigInt> {
    check_rank(lambda.rank(), cov.rank())?;
    Ok(lambda.0.iter().zip(&cov.0).map(|(a, b)| a * b).sum())
}

/// Integral basis of `{lambda : <lambda, c> = 0 for every c in covs}`, in
/// Hermite normal form.
///
/// With the coroots of the even roots as input this is `X_0(T)`, the image of
/// the character group of the even part.
pub fn pairing_kernel(covs: &[Coweight], rank: usize) -> Result<Vec<Weight>> {
    for c in covs {
        check_rank(rank, c.rank())?;
    }
    let rows: Vec<_> = covs.iter().map(|c| c.0.clone()).collect();
    Ok(linalg::integer_kernel(&rows, rank)
        .into_iter()
        .map(Weight)
        .collect())
}

/// Basis of `span_Q(weights) ∩ Z^rank` in Hermite normal form.
pub fn saturation(weights: &[Weight], rank: usize) -> Result<Vec<Weight>> {
    for w in weights {
        check_rank(rank, w.rank())?;
    }
    let rows: Vec<_> = weights.iter().map(|w| w.0.clone()).collect();
    Ok(linalg::saturate(&rows, rank).into_iter().map(Weight).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_i64s(c)
    }

    fn cw(c: &[i64]) -> Coweight {
        Coweight::from_i64s(c)
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair(&w(&[1, -2]), &cw(&[1, -1])).unwrap(), BigInt::from(3));
        assert_eq!(pair(&w(&[0, 0]), &cw(&[7, -9])).unwrap(), BigInt::zero());
        assert_eq!(pair(&w(&[5, 5, 5]), &cw(&[1, -1, 0])).unwrap(), BigInt::zero());
    }

    #[test]
    fn pair_rejects_rank_mismatch() {
        assert_eq!(
            pair(&w(&[1, 2]), &cw(&[1, 2, 3])),
            Err(Error::RankMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn kernel_of_type_a_coroots_is_the_determinant_line() {
        for n in 1..=5usize {
            let covs: Vec<_> = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| &Coweight::unit(n, i) - &Coweight::unit(n, j))
                .collect();
            let k = pairing_kernel(&covs, n).unwrap();
            assert_eq!(k, vec![Weight::from_i64s(&vec![1; n])]);
        }
    }

    #[test]
    fn kernel_without_constraints_is_everything() {
        let k = pairing_kernel(&[], 3).unwrap();
        assert_eq!(k, vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_for_gl_2_1_even_part() {
        let k = pairing_kernel(&[cw(&[1, -1, 0]), cw(&[-1, 1, 0])], 3).unwrap();
        assert_eq!(k, vec![w(&[1, 1, 0]), w(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_rejects_wrong_rank() {
        assert!(matches!(
            pairing_kernel(&[cw(&[1, 0])], 3),
            Err(Error::RankMismatch { .. })
        ));
    }

    fn small_vec(len: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-50i64..50, len)
    }

    proptest! {
        #[test]
        fn pair_is_bilinear(a in small_vec(4), b in small_vec(4), c in small_vec(4)) {
            let (a, b, c) = (w(&a), w(&b), cw(&c));
            let lhs = pair(&(&a + &b), &c).unwrap();
            prop_assert_eq!(lhs, pair(&a, &c).unwrap() + pair(&b, &c).unwrap());
        }

        #[test]
        fn kernel_is_complete_on_a_box(
            covs in proptest::collection::vec(small_vec(3).prop_map(|v| v.into_iter().map(|x| x % 4).collect::<Vec<_>>()), 0..3)
        ) {
            let covs: Vec<_> = covs.iter().map(|c| cw(c)).collect();
            let k = pairing_kernel(&covs, 3).unwrap();
            for row in &k {
                for c in &covs {
                    prop_assert!(pair(row, c).unwrap().is_zero());
                }
            }
            // Brute force: every annihilating weight in {-3..3}^3 lies in the Z-span of k.
            let rows: Vec<Vec<BigInt>> = k.iter().map(|r| r.coords().to_vec()).collect();
            let base_rank = k.len();
            for x in -3i64..=3 {
                for y in -3i64..=3 {
                    for z in -3i64..=3 {
                        let v = w(&[x, y, z]);
                        if covs.iter().all(|c| pair(&v, c).unwrap().is_zero()) {
                            let mut ext = rows.clone();
                            ext.push(v.coords().to_vec());
                            // Same lattice after adding v: HNF unchanged.
                            let h = linalg::hermite_normal_form(ext);
                            prop_assert_eq!(h.len(), base_rank);
                            prop_assert_eq!(&h, &rows);
                        }
                    }
                }
            }
        }
    }
}
