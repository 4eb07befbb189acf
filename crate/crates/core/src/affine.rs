//! Associative algebras `A` and the affine Lie algebras `aff(A) = A ⊕ A`.
//!
//! Basis of `aff(A)`: the `a`-part `(e_1,0) … (e_m,0)` followed by the `b`-part
//! `(0,e_1) … (0,e_m)`. The bracket is
//! `[(a,b),(a',b')] = (aa' − a'a, ab' − a'b)` and the canonical complex structure is
//! `J(a,b) = (b, −a)`.

use num_traits::{One, Zero};

use crate::complex::ComplexStructure;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{combine, frac, rat, rational_sqrt, unit_vector, Frame, LinearMap, Matrix, Rational, Vector};

/// Finite-dimensional real algebra given by its multiplication table `m[i][j] = e_i·e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AssociativeAlgebra {
    basis_names: Vec<String>,
    m: Vec<Vec<Vector>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub associative: bool,
    pub commutative: bool,
}

impl AssociativeAlgebra {
    /// Shape-checked constructor; associativity is reported by [`AssociativeAlgebra::check`], not enforced.
    pub fn new(basis_names: Vec<String>, m: Vec<Vec<Vector>>) -> Result<Self> {
        let n = basis_names.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: m.len() });
        }
        if let Some(v) = m.iter().flatten().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
        Ok(Self { basis_names, m })
    }

    fn from_products(names: &[&str], products: &[(usize, usize, &[i64])]) -> Self {
        let n = names.len();
        let mut m = vec![vec![vec![Rational::zero(); n]; n]; n];
        for &(i, j, v) in products {
            m[i][j] = v.iter().map(|&x| rat(x)).collect();
        }
        Self { basis_names: names.iter().map(|s| s.to_string()).collect(), m }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn product_table(&self, i: usize, j: usize) -> &Vector {
        &self.m[i][j]
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        for v in [a, b] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let coeff = ai * bj;
                for (o, c) in out.iter_mut().zip(&self.m[i][j]) {
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        Ok(out)
    }

    fn unit(&self, k: usize) -> Vector {
        unit_vector(self.dim(), k)
    }

    /// First basis triple violating associativity.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.product(&self.m[i][j], &self.unit(k)).expect("table vectors have length dim");
                    let right = self.product(&self.unit(i), &self.m[j][k]).expect("table vectors have length dim");
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.m[i][j] == self.m[j][i]))
    }

    pub fn is_null(&self) -> bool {
        self.m.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn check(&self) -> AlgebraReport {
        AlgebraReport { associative: self.associativity_defect().is_none(), commutative: self.is_commutative() }
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_multiplication(&self, a: &[Rational]) -> Result<LinearMap> {
        let cols = (0..self.dim()).map(|j| self.product(a, &self.unit(j))).collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols, self.dim())
    }

    /// Multiplicative identity, if there is one.
    pub fn identity_element(&self) -> Option<Vector> {
        let n = self.dim();
        if n == 0 {
            return None;
        }
        // Σ_i u_i m[i][j] = e_j for all j: n² equations in n unknowns.
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let mut row: Vector = (0..n).map(|i| self.m[i][j][k].clone()).collect();
                row.push(if j == k { -Rational::one() } else { Rational::zero() });
                rows.push(row);
            }
        }
        let system = Matrix::from_rows(rows, n + 1).ok()?;
        let kernel = system.kernel();
        kernel.basis_vectors().into_iter().find(|v| !v[n].is_zero()).map(|v| {
            let scale = Rational::one() / v[n].clone();
            v[..n].iter().map(|x| x * &scale).collect()
        })
    }

    /// The zero-product algebra `ℝⁿ`.
    pub fn trivial(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        Self { m: vec![vec![vec![Rational::zero(); n]; n]; n], basis_names: names }
    }

    /// `ℝ` with its usual product.
    pub fn reals() -> Self {
        Self::from_products(&["1"], &[(0, 0, &[1])])
    }

    /// `ℂ` as a real algebra, basis `(1, i)`.
    pub fn complexes() -> Self {
        Self::from_products(&["1", "i"], &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1]), (1, 1, &[-1, 0])])
    }

    /// Diagonal `2×2` matrices `diag(a, b)`, basis `(E11, E22)`.
    pub fn diag2() -> Self {
        Self::from_products(&["E11", "E22"], &[(0, 0, &[1, 0]), (1, 1, &[0, 1])])
    }

    /// Matrices `[[a, 0], [b, a]]`, basis `(I, E21)`: unit and a square-zero element.
    pub fn jordan2() -> Self {
        Self::from_products(&["I", "N"], &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])])
    }

    /// Matrices `[[a, b], [b, a]]`, basis `(I, S)` with `S² = I`.
    pub fn split2() -> Self {
        Self::from_products(&["I", "S"], &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1]), (1, 1, &[1, 0])])
    }

    /// Upper-triangular `2×2` matrices, basis `(E11, E12, E22)`; associative, not commutative.
    pub fn upper_triangular2() -> Self {
        Self::from_products(
            &["E11", "E12", "E22"],
            &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        )
    }

    /// Looks up one of the bundled algebras: `trivial<n>`, `reals`, `complexes`, `diag2`,
    /// `jordan2`, `split2`, `upper2`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "reals" => Ok(Self::reals()),
            "complexes" => Ok(Self::complexes()),
            "diag2" => Ok(Self::diag2()),
            "jordan2" => Ok(Self::jordan2()),
            "split2" => Ok(Self::split2()),
            "upper2" => Ok(Self::upper_triangular2()),
            _ => name
                .strip_prefix("trivial")
                .and_then(|n| n.parse().ok())
                .map(Self::trivial)
                .ok_or_else(|| Error::UnknownName(name.to_string())),
        }
    }
}

/// Real algebra with a complex structure `i` making the product complex bilinear.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexAlgebraStructure {
    base: AssociativeAlgebra,
    i_map: LinearMap,
}

impl ComplexAlgebraStructure {
    pub fn new(base: AssociativeAlgebra, i_map: LinearMap) -> Result<Self> {
        let n = base.dim();
        if i_map.rows() != n || i_map.cols() != n {
            return Err(Error::ShapeMismatch { left: (n, n), right: (i_map.rows(), i_map.cols()) });
        }
        if !i_map.squares_to_minus_identity() {
            return Err(Error::InvalidComplexAlgebra("i² ≠ −1".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let (ea, eb) = (base.unit(a), base.unit(b));
                let iab = i_map.apply(base.product_table(a, b))?;
                if iab != base.product(&i_map.apply(&ea)?, &eb)? || iab != base.product(&ea, &i_map.apply(&eb)?)? {
                    return Err(Error::InvalidComplexAlgebra(format!("product not complex bilinear at ({a},{b})")));
                }
            }
        }
        Ok(Self { base, i_map })
    }

    pub fn base(&self) -> &AssociativeAlgebra {
        &self.base
    }

    pub fn i_map(&self) -> &LinearMap {
        &self.i_map
    }

    pub fn complexes() -> Self {
        Self::new(AssociativeAlgebra::complexes(), LinearMap::from_i64(&[&[0, -1], &[1, 0]]))
            .expect("ℂ is a complex algebra")
    }
}

/// Complex algebra of strictly upper-triangular `(k+1)×(k+1)` Toeplitz matrices
/// `a_1 N + … + a_k N^k`, with `N` the nilpotent shift.
///
/// Real basis `(e_1 … e_k, ie_1 … ie_k)` where `e_p = N^p`, so `e_p·e_q = e_{p+q}` when
/// `p + q ≤ k` and `0` otherwise.
pub fn toeplitz_algebra(k: usize) -> Result<ComplexAlgebraStructure> {
    if k == 0 {
        return Err(Error::HypothesisViolated("Toeplitz algebra needs k ≥ 1".into()));
    }
    let n = 2 * k;
    let mut m = vec![vec![vec![Rational::zero(); n]; n]; n];
    for p in 1..=k {
        for q in 1..=k {
            let r = p + q;
            if r > k {
                continue;
            }
            let (re, im) = (r - 1, k + r - 1);
            let (pr, pi, qr, qi) = (p - 1, k + p - 1, q - 1, k + q - 1);
            m[pr][qr][re] = rat(1);
            m[pr][qi][im] = rat(1);
            m[pi][qr][im] = rat(1);
            m[pi][qi][re] = rat(-1);
        }
    }
    let mut names: Vec<String> = (1..=k).map(|p| format!("e{p}")).collect();
    names.extend((1..=k).map(|p| format!("ie{p}")));
    let base = AssociativeAlgebra::new(names, m)?;
    let mut i_map = LinearMap::zeros(n, n);
    for p in 0..k {
        i_map.set(k + p, p, rat(1));
        i_map.set(p, k + p, rat(-1));
    }
    ComplexAlgebraStructure::new(base, i_map)
}

/// `aff(A)`; refuses non-associative input.
pub fn aff(a: &AssociativeAlgebra) -> Result<LieAlgebra> {
    if let Some((i, j, k)) = a.associativity_defect() {
        return Err(Error::NotAssociative(i, j, k));
    }
    let m = a.dim();
    let n = 2 * m;
    let mut brackets = Vec::new();
    let embed = |v: &Vector, offset: usize| {
        let mut out = vec![Rational::zero(); n];
        out[offset..offset + m].clone_from_slice(v);
        out
    };
    for i in 0..m {
        for j in 0..m {
            // [(e_i,0),(e_j,0)] = (e_ie_j − e_je_i, 0)
            if i < j {
                let v: Vector = a.m[i][j].iter().zip(&a.m[j][i]).map(|(x, y)| x - y).collect();
                brackets.push((i, j, embed(&v, 0)));
            }
            // [(e_i,0),(0,e_j)] = (0, e_ie_j)
            brackets.push((i, m + j, embed(&a.m[i][j], m)));
        }
    }
    let mut names: Vec<String> = a.basis_names.iter().map(|s| format!("a_{s}")).collect();
    names.extend(a.basis_names.iter().map(|s| format!("b_{s}")));
    LieAlgebra::from_brackets(names, &brackets)
}

/// `J(a, b) = (b, −a)`, the block matrix `[[0, I], [−I, 0]]`.
pub fn standard_j(dim_a: usize) -> ComplexStructure {
    let mut j = LinearMap::zeros(2 * dim_a, 2 * dim_a);
    for i in 0..dim_a {
        j.set(i, dim_a + i, rat(1));
        j.set(dim_a + i, i, rat(-1));
    }
    ComplexStructure::new(j).expect("block rotation squares to −I")
}

/// Sign convention for the second complex structure on `aff(A)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KConvention {
    /// `K(a, b) = (−ia, ib)`.
    #[default]
    NegateFirst,
    /// `K(a, b) = (ia, −ib)`.
    NegateSecond,
}

impl KConvention {
    /// Command-line spelling: `sec2` or `sec3`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sec2" => Ok(Self::NegateFirst),
            "sec3" => Ok(Self::NegateSecond),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

pub fn standard_k(c: &ComplexAlgebraStructure, convention: KConvention) -> ComplexStructure {
    let i = c.i_map();
    let minus_i = -i;
    let k = match convention {
        KConvention::NegateFirst => minus_i.block_diag(i),
        KConvention::NegateSecond => i.block_diag(&minus_i),
    };
    ComplexStructure::new(k).expect("block diagonal of complex structures")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectionReport {
    pub torsion_free: bool,
    pub flat: bool,
    pub j_parallel: bool,
}

impl ConnectionReport {
    pub fn all(&self) -> bool {
        self.torsion_free && self.flat && self.j_parallel
    }
}

/// `∇_{(a,b)}(c,d) = (ac, ad)` on `aff(A)`, stored as `nabla[p][q] = ∇_{E_p} E_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineConnection {
    nabla: Vec<Vec<Vector>>,
}

impl AffineConnection {
    pub fn new(a: &AssociativeAlgebra) -> Self {
        let m = a.dim();
        let n = 2 * m;
        let mut nabla = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (row, products) in nabla.iter_mut().zip(&a.m) {
            for (j, p) in products.iter().enumerate() {
                row[j][..m].clone_from_slice(p);
                row[m + j][m..].clone_from_slice(p);
            }
        }
        Self { nabla }
    }

    pub fn dim(&self) -> usize {
        self.nabla.len()
    }

    pub fn covariant(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let row: Vec<Vector> = self.nabla[p].clone();
            let scaled: Vector = combine(n, y, &row);
            for (o, s) in out.iter_mut().zip(scaled) {
                *o += xp * s;
            }
        }
        out
    }
}

/// Torsion-freeness, flatness and `J`-parallelism of the canonical connection on `aff(A)`.
pub fn connection_checks(a: &AssociativeAlgebra) -> Result<ConnectionReport> {
    let g = aff(a)?;
    let j = standard_j(a.dim());
    let nabla = AffineConnection::new(a);
    let n = g.dim();
    let e = |k: usize| unit_vector::<Rational>(n, k);
    let sub = |x: &Vector, y: &Vector| -> Vector { x.iter().zip(y).map(|(a, b)| a - b).collect() };

    let mut report = ConnectionReport { torsion_free: true, flat: true, j_parallel: true };
    for p in 0..n {
        for q in 0..n {
            let (x, y) = (e(p), e(q));
            let torsion = sub(&sub(&nabla.covariant(&x, &y), &nabla.covariant(&y, &x)), &g.bracket(&x, &y)?);
            if !torsion.iter().all(Zero::is_zero) {
                report.torsion_free = false;
            }
            if nabla.covariant(&x, &j.apply(&y)?) != j.apply(&nabla.covariant(&x, &y))? {
                report.j_parallel = false;
            }
            let xy = g.bracket(&x, &y)?;
            for r in 0..n {
                let z = e(r);
                // R(X,Y)Z = ∇_{[X,Y]}Z − ∇_X∇_Y Z + ∇_Y∇_X Z
                let curvature = sub(
                    &sub(&nabla.covariant(&xy, &z), &nabla.covariant(&x, &nabla.covariant(&y, &z))),
                    &nabla.covariant(&y, &nabla.covariant(&x, &z)).iter().map(|v| -v).collect(),
                );
                if !curvature.iter().all(Zero::is_zero) {
                    report.flat = false;
                }
            }
        }
    }
    Ok(report)
}

/// Isomorphism types of the small commutative algebras that occur as affine building blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraClass {
    /// The zero algebra.
    Zero,
    /// Zero product on `ℝⁿ`.
    Null(usize),
    Reals,
    Complexes,
    /// `ℝ ⊕ ℝ`; both `diag2` and `split2` are of this type.
    Split,
    /// `ℝ[ε]/(ε²)`, the `jordan2` algebra.
    DualNumbers,
    /// Anything else (larger dimension, non-unital two-dimensional, …).
    Other,
}

/// Checks `f(e_i e_j) = f(e_i) f(e_j)` on all basis pairs.
pub fn is_algebra_homomorphism(f: &LinearMap, source: &AssociativeAlgebra, target: &AssociativeAlgebra) -> Result<bool> {
    if f.cols() != source.dim() || f.rows() != target.dim() {
        return Err(Error::ShapeMismatch { left: (target.dim(), source.dim()), right: (f.rows(), f.cols()) });
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.apply(source.product_table(i, j))?;
            let rhs = target.product(&f.column(i), &f.column(j))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Identification of a small commutative algebra, with a verified isomorphism from the
/// model algebra when one exists over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Identification {
    pub class: AlgebraClass,
    /// Model algebra for `class`, when there is one.
    pub model: Option<AssociativeAlgebra>,
    /// Isomorphism `model → A`; absent when it would need an irrational scalar.
    pub isomorphism: Option<LinearMap>,
}

pub fn identify(a: &AssociativeAlgebra) -> Result<Identification> {
    let report = a.check();
    let other = Identification { class: AlgebraClass::Other, model: None, isomorphism: None };
    if !report.associative || !report.commutative {
        return Ok(other);
    }
    let verified = |class, model: AssociativeAlgebra, iso: Option<LinearMap>| -> Result<Identification> {
        if let Some(f) = &iso {
            if !(f.is_invertible() && is_algebra_homomorphism(f, &model, a)?) {
                return Err(Error::Certificate(format!("{class:?} identification map is not an isomorphism")));
            }
        }
        Ok(Identification { class, model: Some(model), isomorphism: iso })
    };
    let n = a.dim();
    if n == 0 {
        return verified(AlgebraClass::Zero, AssociativeAlgebra::trivial(0), Some(LinearMap::zeros(0, 0)));
    }
    if a.is_null() {
        return verified(AlgebraClass::Null(n), AssociativeAlgebra::trivial(n), Some(LinearMap::identity(n)));
    }
    if n == 1 {
        // e² = λe, and 1 ↦ e/λ
        let lambda = a.product_table(0, 0)[0].clone();
        let iso = LinearMap::from_rows(vec![vec![Rational::one() / lambda]], 1)?;
        return verified(AlgebraClass::Reals, AssociativeAlgebra::reals(), Some(iso));
    }
    if n != 2 {
        return Ok(other);
    }
    let Some(unit) = a.identity_element() else {
        return Ok(other);
    };
    let v = (0..2)
        .map(|k| a.unit(k))
        .find(|v| Frame::new(2, vec![unit.clone(), v.clone()]).is_ok())
        .expect("some basis vector is independent of the unit");
    let frame = Frame::new(2, vec![unit.clone(), v.clone()])?;
    let sq = frame.solve(&a.product(&v, &v)?)?.expect("frame spans A");
    let (alpha, beta) = (sq[0].clone(), sq[1].clone());
    // w = v − (β/2)·1 has w² = δ·1
    let half_beta = &beta * frac(1, 2);
    let w: Vector = v.iter().zip(&unit).map(|(x, u)| x - &half_beta * u).collect();
    let delta = alpha + &half_beta * &half_beta;
    let columns = |second: Vector| Matrix::from_columns(&[unit.clone(), second], 2);
    if delta.is_zero() {
        return verified(AlgebraClass::DualNumbers, AssociativeAlgebra::jordan2(), Some(columns(w)?));
    }
    let negative = delta < Rational::zero();
    let root = rational_sqrt(&if negative { -delta } else { delta });
    let iso = match root {
        Some(s) => Some(columns(w.iter().map(|x| x / &s).collect())?),
        None => None,
    };
    if negative {
        verified(AlgebraClass::Complexes, AssociativeAlgebra::complexes(), iso)
    } else {
        verified(AlgebraClass::Split, AssociativeAlgebra::split2(), iso)
    }
}
