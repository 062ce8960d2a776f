//! The matrix Lie superalgebras `gl(m|n)`, `q(n)` and `p(n)` with exact
//! integer structure constants.
//!
//! Every algebra carries a homogeneous basis of integer matrices in the
//! defining representation, each basis element being a torus weight vector.
//! Even elements come first, then odd ones; within a parity the order is
//! row-major in the position of the element's pivot entry. This fixes all sign
//! conventions: `X_alpha`, `Y_gamma` and `K_t` are the basis elements of the
//! corresponding weight spaces, and `K_alpha = [X_alpha, Y_{-alpha}]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::lattice::{check_rank, Weight};
use crate::linalg::{self, Row};
use crate::rootdata::{self, OrderFunctional, SuperRootDatum};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// The built-in families of matrix Lie superalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieFamily {
    /// `gl(m|n)`, all of `Mat_{m|n}`.
    Gl { m: usize, n: usize },
    /// The queer superalgebra `q(n)` inside `gl(n|n)`.
    Queer { n: usize },
    /// The periplectic superalgebra `p(n)`: `(A B; C -A^t)` with `B` symmetric
    /// and `C` antisymmetric.
    Periplectic { n: usize },
}

impl LieFamily {
    pub fn label(&self) -> String {
        match *self {
            LieFamily::Gl { m, n } => format!("gl({m}|{n})"),
            LieFamily::Queer { n } => format!("q({n})"),
            LieFamily::Periplectic { n } => format!("p({n})"),
        }
    }

    /// Inverse of [`LieFamily::label`].
    pub fn parse_label(label: &str) -> Option<Self> {
        let label = label.trim();
        let (head, rest) = label.split_once('(')?;
        let inner = rest.strip_suffix(')')?;
        let family = match head {
            "gl" => {
                let (m, n) = inner.split_once('|')?;
                LieFamily::Gl { m: m.parse().ok()?, n: n.parse().ok()? }
            }
            "q" => LieFamily::Queer { n: inner.parse().ok()? },
            "p" => LieFamily::Periplectic { n: inner.parse().ok()? },
            _ => return None,
        };
        family.check().ok()?;
        Some(family)
    }

    fn check(&self) -> Result<()> {
        match *self {
            LieFamily::Gl { m, n } if m >= 1 && n >= 1 => Ok(()),
            LieFamily::Queer { n } if n >= 1 => Ok(()),
            LieFamily::Periplectic { n } if n >= 2 => Ok(()),
            _ => Err(Error::InvalidParameter(format!("unsupported family parameters: {self:?}"))),
        }
    }

    /// Rank of the character lattice of the standard torus.
    pub fn rank(&self) -> usize {
        match *self {
            LieFamily::Gl { m, n } => m + n,
            LieFamily::Queer { n } | LieFamily::Periplectic { n } => n,
        }
    }

    pub fn matrix_size(&self) -> usize {
        match *self {
            LieFamily::Gl { m, n } => m + n,
            LieFamily::Queer { n } | LieFamily::Periplectic { n } => 2 * n,
        }
    }

    /// The root datum of the corresponding supergroup.
    pub fn datum(&self) -> Result<SuperRootDatum> {
        match *self {
            LieFamily::Gl { m, n } => rootdata::build_gl(m, n),
            LieFamily::Queer { n } => rootdata::build_q(n),
            LieFamily::Periplectic { n } => rootdata::build_p(n),
        }
    }

    pub fn algebra(&self) -> Result<LieSuperAlgebra> {
        LieSuperAlgebra::new(*self)
    }

    /// The standard order: `Υ(λ_i) = -i` for `gl` and `q`, `Υ(λ_i) = n - i + 1` for `p`.
    pub fn standard_order(&self) -> OrderFunctional {
        match *self {
            LieFamily::Periplectic { n } => {
                OrderFunctional::from_integers(&(1..=n as i64).map(|i| n as i64 - i + 1).collect::<Vec<_>>())
            }
            _ => OrderFunctional::descending(self.rank()),
        }
    }

    /// The standard admissible base for [`LieFamily::standard_order`].
    pub fn standard_base(&self) -> Result<AdmissibleBase> {
        let datum = self.datum()?;
        let psi_even = rootdata::even_base(&datum, &self.standard_order())?;
        let rank = self.rank();
        let psi_odd = match *self {
            LieFamily::Gl { m, .. } => vec![&Weight::unit(rank, m - 1) - &Weight::unit(rank, m)],
            LieFamily::Queer { .. } => psi_even.clone(),
            LieFamily::Periplectic { n } => vec![Weight::unit(rank, n - 1).scale(&BigInt::from(2))],
        };
        Ok(AdmissibleBase { psi_even, psi_odd })
    }

    /// Diagonal matrix of the torus element with coordinates `c`.
    pub fn torus_matrix(&self, c: &[i64]) -> Matrix {
        let size = self.matrix_size();
        let mut t = Matrix::zero(size);
        match *self {
            LieFamily::Gl { .. } => {
                for (i, &x) in c.iter().enumerate() {
                    t.set(i, i, x);
                }
            }
            LieFamily::Queer { n } => {
                for (i, &x) in c.iter().enumerate() {
                    t.set(i, i, x);
                    t.set(n + i, n + i, x);
                }
            }
            LieFamily::Periplectic { n } => {
                for (i, &x) in c.iter().enumerate() {
                    t.set(i, i, x);
                    t.set(n + i, n + i, -x);
                }
            }
        }
        t
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Matrix { size, entries: vec![0; size * size] }
    }

    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(size);
        m.set(i, j, 1);
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Matrix, k: i64) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += k * b;
        }
    }

    pub fn scaled(&self, k: i64) -> Matrix {
        Matrix { size: self.size, entries: self.entries.iter().map(|x| x * k).collect() }
    }

    /// `XY - (-1)^{|X||Y|} YX`.
    pub fn super_commutator(x: &Matrix, px: Parity, y: &Matrix, py: Parity) -> Matrix {
        let mut out = x.mul(y);
        let sign = if px.is_odd() && py.is_odd() { 1 } else { -1 };
        out.add_scaled(&y.mul(x), sign);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub index: usize,
    pub parity: Parity,
    pub weight: Weight,
    pub matrix: Matrix,
}

/// An element of a [`LieSuperAlgebra`], as integer coordinates in its basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieElement(Vec<i64>);

impl LieElement {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LieElement(coeffs)
    }

    pub fn zero(dim: usize) -> Self {
        LieElement(vec![0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[i] = 1;
        e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> LieElement {
        LieElement(self.0.iter().map(|a| a * k).collect())
    }

    fn to_row(&self) -> Row {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn from_row(row: &Row) -> LieElement {
        LieElement(row.iter().map(|x| x.to_i64().expect("structure constants fit in i64")).collect())
    }
}

#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    family: LieFamily,
    basis: Vec<BasisElement>,
    pivots: Vec<(usize, usize)>,
    /// Nonzero brackets of basis pairs, as sparse coordinate lists.
    bracket_table: BTreeMap<(usize, usize), Vec<(usize, i64)>>,
}

struct RawBasis {
    parity: Parity,
    weight: Vec<i64>,
    matrix: Matrix,
    pivot: (usize, usize),
}

fn raw_basis(family: LieFamily) -> Vec<RawBasis> {
    let size = family.matrix_size();
    let rank = family.rank();
    let diff = |i: usize, j: usize| {
        let mut w = vec![0; rank];
        w[i] += 1;
        w[j] -= 1;
        w
    };
    let mut out = Vec::new();
    match family {
        LieFamily::Gl { m, .. } => {
            for parity in [Parity::Even, Parity::Odd] {
                for i in 0..size {
                    for j in 0..size {
                        let p = if (i < m) == (j < m) { Parity::Even } else { Parity::Odd };
                        if p == parity {
                            out.push(RawBasis { parity, weight: diff(i, j), matrix: Matrix::unit(size, i, j), pivot: (i, j) });
                        }
                    }
                }
            }
        }
        LieFamily::Queer { n } => {
            for i in 0..n {
                for j in 0..n {
                    let mut x = Matrix::unit(size, i, j);
                    x.set(n + i, n + j, 1);
                    out.push(RawBasis { parity: Parity::Even, weight: diff(i, j), matrix: x, pivot: (i, j) });
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let mut y = Matrix::unit(size, i, n + j);
                    y.set(n + i, j, 1);
                    out.push(RawBasis { parity: Parity::Odd, weight: diff(i, j), matrix: y, pivot: (i, n + j) });
                }
            }
        }
        LieFamily::Periplectic { n } => {
            for i in 0..n {
                for j in 0..n {
                    let mut x = Matrix::unit(size, i, j);
                    x.set(n + j, n + i, -1);
                    out.push(RawBasis { parity: Parity::Even, weight: diff(i, j), matrix: x, pivot: (i, j) });
                }
            }
            // Odd part, in row-major pivot order: the symmetric upper-right block
            // (weights λ_i + λ_j, i ≤ j) comes before the antisymmetric
            // lower-left block (weights -(λ_i + λ_j), i < j).
            for i in 0..n {
                for j in i..n {
                    let mut y = Matrix::unit(size, i, n + j);
                    y.set(j, n + i, 1);
                    let mut w = vec![0; rank];
                    w[i] += 1;
                    w[j] += 1;
                    out.push(RawBasis { parity: Parity::Odd, weight: w, matrix: y, pivot: (i, n + j) });
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    let mut y = Matrix::unit(size, n + i, j);
                    y.set(n + j, i, -1);
                    let mut w = vec![0; rank];
                    w[i] -= 1;
                    w[j] -= 1;
                    out.push(RawBasis { parity: Parity::Odd, weight: w, matrix: y, pivot: (n + i, j) });
                }
            }
        }
    }
    out
}

impl LieSuperAlgebra {
    pub fn new(family: LieFamily) -> Result<Self> {
        family.check()?;
        let raw = raw_basis(family);
        let pivots = raw.iter().map(|r| r.pivot).collect();
        let basis = raw
            .into_iter()
            .enumerate()
            .map(|(index, r)| BasisElement {
                index,
                parity: r.parity,
                weight: Weight::from_i64s(&r.weight),
                matrix: r.matrix,
            })
            .collect();
        let mut algebra = LieSuperAlgebra { family, basis, pivots, bracket_table: BTreeMap::new() };
        let dim = algebra.dim();
        for a in 0..dim {
            for b in 0..dim {
                let (x, y) = (&algebra.basis[a], &algebra.basis[b]);
                let m = Matrix::super_commutator(&x.matrix, x.parity, &y.matrix, y.parity);
                if m.is_zero() {
                    continue;
                }
                let e = algebra.decompose(&m)?;
                let sparse: Vec<_> =
                    e.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
                algebra.bracket_table.insert((a, b), sparse);
            }
        }
        Ok(algebra)
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// `(dim g_even, dim g_odd)`.
    pub fn parity_dims(&self) -> (usize, usize) {
        let odd = self.basis.iter().filter(|b| b.parity.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn element(&self, i: usize) -> LieElement {
        LieElement::basis(self.dim(), i)
    }

    /// Structure constants of `[e_a, e_b]` as `(index, coefficient)` pairs.
    pub fn structure_constants(&self, a: usize, b: usize) -> &[(usize, i64)] {
        self.bracket_table.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Expresses a matrix in the basis.
    pub fn decompose(&self, m: &Matrix) -> Result<LieElement> {
        if m.size() != self.family.matrix_size() {
            return Err(Error::RankMismatch { expected: self.family.matrix_size(), found: m.size() });
        }
        let coeffs: Vec<i64> = self.pivots.iter().map(|&(i, j)| m.get(i, j)).collect();
        let e = LieElement(coeffs);
        if self.to_matrix(&e) != *m {
            return Err(Error::NotInSpan);
        }
        Ok(e)
    }

    pub fn to_matrix(&self, x: &LieElement) -> Matrix {
        let mut m = Matrix::zero(self.family.matrix_size());
        for (c, b) in x.0.iter().zip(&self.basis) {
            if *c != 0 {
                m.add_scaled(&b.matrix, *c);
            }
        }
        m
    }

    fn check_dim(&self, x: &LieElement) -> Result<()> {
        check_rank(self.dim(), x.dim())
    }

    /// The super bracket, extended bilinearly from the basis.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = vec![0i64; self.dim()];
        for (a, &xa) in x.0.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (b, &yb) in y.0.iter().enumerate().filter(|(_, c)| **c != 0) {
                for &(k, c) in self.structure_constants(a, b) {
                    out[k] += xa * yb * c;
                }
            }
        }
        Ok(LieElement(out))
    }

    /// Splits an element into its even and odd components.
    pub fn homogeneous_parts(&self, x: &LieElement) -> (LieElement, LieElement) {
        let mut even = LieElement::zero(self.dim());
        let mut odd = LieElement::zero(self.dim());
        for (i, b) in self.basis.iter().enumerate() {
            match b.parity {
                Parity::Even => even.0[i] = x.0[i],
                Parity::Odd => odd.0[i] = x.0[i],
            }
        }
        (even, odd)
    }

    /// Basis elements spanning `g_parity^w`.
    pub fn weight_space(&self, w: &Weight, parity: Parity) -> Vec<&BasisElement> {
        self.basis.iter().filter(|b| b.parity == parity && b.weight == *w).collect()
    }

    fn unique_root_vector(&self, w: &Weight, parity: Parity) -> Result<LieElement> {
        let space = self.weight_space(w, parity);
        if space.len() != 1 {
            return Err(Error::Precondition(format!(
                "the {parity:?} weight space of {w} has dimension {}, expected 1",
                space.len()
            )));
        }
        Ok(self.element(space[0].index))
    }

    /// `K_alpha = [X_alpha, Y_{-alpha}]`, an element of the odd Cartan.
    pub fn k_alpha(&self, alpha: &Weight) -> Result<LieElement> {
        check_rank(self.rank(), alpha.rank())?;
        let x = self.unique_root_vector(alpha, Parity::Even)?;
        let y = self.unique_root_vector(&-alpha, Parity::Odd)?;
        self.bracket(&x, &y)
    }

    /// Torus coordinates of an element of the even Cartan subalgebra.
    pub fn cartan_coords(&self, h: &LieElement) -> Result<Vec<i64>> {
        self.check_dim(h)?;
        let outside = h
            .0
            .iter()
            .zip(&self.basis)
            .any(|(&c, b)| c != 0 && (b.parity.is_odd() || !b.weight.is_zero()));
        if outside {
            return Err(Error::NotCartan);
        }
        let m = self.to_matrix(h);
        let coords: Vec<i64> = (0..self.rank()).map(|i| m.get(i, i)).collect();
        if self.family.torus_matrix(&coords) != m {
            return Err(Error::NotCartan);
        }
        Ok(coords)
    }

    /// `lambda(h)` for `h` in the even Cartan, e.g. `lambda(H_alpha) = <lambda, alpha^∨>`.
    pub fn eval_weight_on_cartan(&self, lambda: &Weight, h: &LieElement) -> Result<BigInt> {
        check_rank(self.rank(), lambda.rank())?;
        let c = self.cartan_coords(h)?;
        Ok(lambda.coords().iter().zip(c).map(|(l, x)| l * BigInt::from(x)).sum())
    }

    /// Basis of `h_odd`, the odd weight-zero part.
    pub fn odd_cartan(&self) -> Vec<&BasisElement> {
        self.weight_space(&Weight::zero(self.rank()), Parity::Odd)
    }

    /// The smallest bracket-closed super-subspace containing `generators`.
    ///
    /// Generators are split into homogeneous components first. The result is
    /// the saturated integer lattice of the rational closure, in Hermite
    /// normal form (even vectors first, since the basis lists even elements
    /// first).
    pub fn subalgebra_closure(&self, generators: &[LieElement]) -> Result<Vec<LieElement>> {
        let dim = self.dim();
        let mut rows: Vec<Row> = Vec::new();
        for g in generators {
            self.check_dim(g)?;
            let (e, o) = self.homogeneous_parts(g);
            rows.push(e.to_row());
            rows.push(o.to_row());
        }
        let mut basis = linalg::saturate(&rows, dim);
        loop {
            let elems: Vec<LieElement> = basis.iter().map(LieElement::from_row).collect();
            let mut next = basis.clone();
            for i in 0..elems.len() {
                for j in i..elems.len() {
                    let b = self.bracket(&elems[i], &elems[j])?;
                    if !b.is_zero() {
                        next.push(b.to_row());
                    }
                }
            }
            let next = linalg::saturate(&next, dim);
            if next.len() == basis.len() {
                return Ok(elems);
            }
            basis = next;
        }
    }

    /// Whether `x` lies in the rational span of `span`.
    pub fn in_span(&self, span: &[LieElement], x: &LieElement) -> bool {
        let mut rows: Vec<Row> = span.iter().map(LieElement::to_row).collect();
        let before = linalg::rank(&rows);
        rows.push(x.to_row());
        linalg::rank(&rows) == before
    }
}

/// A pair `(Ψ_even, Ψ_odd)` of simple even roots and odd generating roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleBase {
    pub psi_even: Vec<Weight>,
    pub psi_odd: Vec<Weight>,
}

/// Which generators the generation condition may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GenerationSemantics {
    /// Only the odd root vectors of `Ψ_odd`.
    Strict,
    /// The odd root vectors of `Ψ_odd` together with the even root vectors of `Ψ_even`.
    #[default]
    Assisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// Every positive odd root space lies in the generated subalgebra.
    Generation,
    /// `γ - α ∉ Δ` for `α ∈ Ψ_even`, `γ ∈ Ψ_odd`, `α ≠ γ`.
    Separation,
    /// `dim g_odd^{±α} = 1` for `α ∈ Ψ_even ∩ Ψ_odd`.
    MultiplicityOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityFailure {
    pub condition: Condition,
    /// The roots witnessing the failure.
    pub roots: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub semantics: GenerationSemantics,
    pub generation: bool,
    pub separation: bool,
    pub multiplicity_one: bool,
    pub failures: Vec<AdmissibilityFailure>,
    pub ok: bool,
}

/// Checks the three admissibility conditions for `(Ψ_even, Ψ_odd)`.
///
/// `Ψ_even` must be the set of simple roots of `Δ_even^+` and `Ψ_odd` must lie
/// in `Δ_odd^+`; otherwise an [`Error::InvalidParameter`] is returned.
pub fn check_admissible_base(
    lie: &LieSuperAlgebra,
    datum: &SuperRootDatum,
    order: &OrderFunctional,
    base: &AdmissibleBase,
    semantics: GenerationSemantics,
) -> Result<AdmissibilityReport> {
    check_rank(datum.rank(), lie.rank())?;
    let ps = rootdata::positive_system(datum, order)?;
    let simple = rootdata::simple_roots(&ps);
    let mut given_even = base.psi_even.clone();
    given_even.sort();
    given_even.dedup();
    if given_even != simple {
        return Err(Error::InvalidParameter(String::from(
            "psi_even is not the set of simple roots of the positive even roots",
        )));
    }
    for g in &base.psi_odd {
        if !ps.odd_pos.iter().any(|o| o.root == *g) {
            return Err(Error::InvalidParameter(format!("odd root {g} is not a positive odd root")));
        }
    }

    let mut failures = Vec::new();

    let mut generators: Vec<LieElement> = Vec::new();
    for g in &base.psi_odd {
        generators.extend(lie.weight_space(g, Parity::Odd).iter().map(|b| lie.element(b.index)));
    }
    if semantics == GenerationSemantics::Assisted {
        for a in &base.psi_even {
            generators.extend(lie.weight_space(a, Parity::Even).iter().map(|b| lie.element(b.index)));
        }
    }
    let closure = lie.subalgebra_closure(&generators)?;
    let missing: Vec<Weight> = ps
        .odd_pos
        .iter()
        .filter(|o| {
            lie.weight_space(&o.root, Parity::Odd)
                .iter()
                .any(|b| !lie.in_span(&closure, &lie.element(b.index)))
        })
        .map(|o| o.root.clone())
        .collect();
    let generation = missing.is_empty();
    if !generation {
        failures.push(AdmissibilityFailure { condition: Condition::Generation, roots: missing });
    }

    let mut separation = true;
    for a in &base.psi_even {
        for g in &base.psi_odd {
            if a != g {
                let diff = g - a;
                if datum.contains_root(&diff) {
                    separation = false;
                    failures.push(AdmissibilityFailure {
                        condition: Condition::Separation,
                        roots: vec![a.clone(), g.clone()],
                    });
                }
            }
        }
    }

    let mut multiplicity_one = true;
    for a in base.psi_even.iter().filter(|a| base.psi_odd.contains(a)) {
        let ok = datum.odd_multiplicity(a) == 1 && datum.odd_multiplicity(&-a) == 1;
        if !ok {
            multiplicity_one = false;
            failures.push(AdmissibilityFailure { condition: Condition::MultiplicityOne, roots: vec![a.clone()] });
        }
    }

    Ok(AdmissibilityReport {
        semantics,
        generation,
        separation,
        multiplicity_one,
        ok: generation && separation && multiplicity_one,
        failures,
    })
}
