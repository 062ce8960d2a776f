//! The weight form `b^λ(x, y) = λ([x, y])` on `h_odd` and the simple module of
//! its Clifford superalgebra.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::lattice::{check_rank, Weight};
use crate::linalg;
use crate::liesuper::LieSuperAlgebra;
use crate::rootdata::{is_prime, SuperRootDatum};
use crate::{Error, Result};

/// Symmetric Gram matrix of `b^λ` in the basis of `h_odd` chosen by the Lie
/// superalgebra. Entries are reduced into `[0, p)` when `char_p > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordForm {
    pub gram: Vec<Vec<BigInt>>,
    pub lambda: Option<Weight>,
    pub char_p: u64,
}

/// Type of a simple supermodule: `M` (no odd automorphism) or `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleType {
    M,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimpleModuleShape {
    pub dim: u64,
    pub kind: SimpleType,
}

fn check_characteristic(char_p: u64) -> Result<()> {
    if char_p == 0 || (char_p > 2 && is_prime(char_p)) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("characteristic must be 0 or an odd prime, got {char_p}")))
    }
}

impl CliffordForm {
    /// A form given directly by its Gram matrix.
    pub fn from_gram(gram: Vec<Vec<BigInt>>, char_p: u64) -> Result<Self> {
        check_characteristic(char_p)?;
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!("gram row {i} has length {}, expected {n}", row.len())));
            }
            for j in 0..i {
                if row[j] != gram[j][i] {
                    return Err(Error::InvalidParameter(format!("gram is not symmetric at ({i}, {j})")));
                }
            }
        }
        let gram = if char_p > 0 {
            let p = BigInt::from(char_p);
            gram.into_iter().map(|r| r.into_iter().map(|x| x.mod_floor(&p)).collect()).collect()
        } else {
            gram
        };
        Ok(CliffordForm { gram, lambda: None, char_p })
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// Rank over `Q` or over `F_p`.
    pub fn rank(&self) -> usize {
        if self.char_p == 0 {
            linalg::rank(&self.gram)
        } else {
            linalg::rank_mod_p(&self.gram, self.char_p)
        }
    }
}

/// `b^λ` on `h_odd` of `lie`; an empty form when `h_odd = 0`.
pub fn gram_form(lie: &LieSuperAlgebra, lambda: &Weight, char_p: u64) -> Result<CliffordForm> {
    check_rank(lie.rank(), lambda.rank())?;
    check_characteristic(char_p)?;
    let ks: Vec<_> = lie.odd_cartan().iter().map(|b| lie.element(b.index)).collect();
    let mut gram = alloc::vec![alloc::vec![BigInt::zero(); ks.len()]; ks.len()];
    for s in 0..ks.len() {
        for t in s..ks.len() {
            let h = lie.bracket(&ks[s], &ks[t])?;
            let v = lie.eval_weight_on_cartan(lambda, &h)?;
            gram[s][t] = v.clone();
            gram[t][s] = v;
        }
    }
    let mut form = CliffordForm::from_gram(gram, char_p)?;
    form.lambda = Some(lambda.clone());
    Ok(form)
}

/// Dimension and type of the simple supermodule of `Cl(h_odd, b^λ)` over an
/// algebraically closed field: `2^{⌈rk/2⌉}`, type `M` for even rank and `Q`
/// for odd rank.
pub fn u_lambda_dim_closed(form: &CliffordForm) -> SimpleModuleShape {
    let rk = form.rank();
    let dim = 1u64 << rk.div_ceil(2);
    let kind = if rk.is_multiple_of(2) { SimpleType::M } else { SimpleType::Q };
    SimpleModuleShape { dim, kind }
}

/// True when absolute simplicity of simple supermodules is not guaranteed,
/// i.e. when `0 ∈ Δ` (`h_odd ≠ 0`).
pub fn may_fail_absolute_simplicity(d: &SuperRootDatum) -> bool {
    d.h_odd_dim() > 0
}
