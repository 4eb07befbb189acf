//! Named example algebras with their complex structures.
//!
//! Each entry carries the properties it is expected to have; construction recomputes
//! every one of them and fails on a mismatch.

use num_traits::{One, Zero};

use crate::affine::{aff, standard_j, standard_k, toeplitz_algebra, AssociativeAlgebra, ComplexAlgebraStructure, KConvention};
use crate::complex::{is_abelian, ComplexStructure};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{rat, LinearMap, Rational, Subspace, Vector};

/// Properties asserted for an entry; `None` means "not asserted".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectedProperties {
    /// Every attached structure is abelian.
    pub abelian: Option<bool>,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub nilpotency_class: Option<usize>,
    pub dim_center: Option<usize>,
    pub dim_commutator: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: LieAlgebra,
    pub structures: Vec<ComplexStructure>,
    pub expected: ExpectedProperties,
    /// Commutative algebra `A` with `s/z ≅ aff(A)`, when known.
    pub affine_model: Option<AssociativeAlgebra>,
    /// Complex structure on `affine_model`, for entries built from a complex algebra.
    pub complex_model: Option<ComplexAlgebraStructure>,
}

impl CatalogEntry {
    fn build(
        id: impl Into<String>,
        algebra: LieAlgebra,
        structures: Vec<ComplexStructure>,
        expected: ExpectedProperties,
    ) -> Result<Self> {
        let entry = Self { id: id.into(), algebra, structures, expected, affine_model: None, complex_model: None };
        entry.verify()?;
        Ok(entry)
    }

    fn with_model(mut self, a: AssociativeAlgebra) -> Self {
        self.affine_model = Some(a);
        self
    }

    /// Recomputes each asserted property.
    pub fn verify(&self) -> Result<()> {
        let g = &self.algebra;
        let e = &self.expected;
        let fail = |what: &str| Err(Error::Certificate(format!("catalog entry {}: {what} mismatch", self.id)));
        if !g.validate().is_valid() {
            return fail("Lie axioms");
        }
        if let Some(want) = e.abelian {
            let mut all = true;
            for j in &self.structures {
                all &= is_abelian(g, j)?;
            }
            if all != want {
                return fail("abelian");
            }
        }
        if e.solvable.is_some_and(|s| s != g.is_solvable()) {
            return fail("solvable");
        }
        let class = g.nilpotency_class();
        if e.nilpotent.is_some_and(|n| n != class.is_some()) {
            return fail("nilpotent");
        }
        if e.nilpotency_class.is_some() && e.nilpotency_class != class {
            return fail("nilpotency class");
        }
        if e.dim_center.is_some_and(|d| d != g.center().dim()) {
            return fail("center dimension");
        }
        if e.dim_commutator.is_some_and(|d| d != g.commutator_subalgebra().dim()) {
            return fail("commutator dimension");
        }
        Ok(())
    }

    /// The first attached structure.
    pub fn j(&self) -> Option<&ComplexStructure> {
        self.structures.first()
    }

    /// `dim g − dim [g, g]`.
    pub fn commutator_codim(&self) -> usize {
        self.algebra.dim() - self.algebra.commutator_subalgebra().dim()
    }

    /// `s/z` together with its projection.
    pub fn center_quotient(&self) -> Result<LieAlgebra> {
        Ok(self.algebra.quotient(&self.algebra.center())?.algebra)
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn unit(n: usize, k: usize) -> Vector {
    crate::linalg::unit_vector(n, k)
}

fn expect(abelian: bool, nilpotency_class: Option<usize>, dim_center: usize, dim_commutator: usize) -> ExpectedProperties {
    ExpectedProperties {
        abelian: Some(abelian),
        solvable: Some(true),
        nilpotent: Some(nilpotency_class.is_some()),
        nilpotency_class,
        dim_center: Some(dim_center),
        dim_commutator: Some(dim_commutator),
    }
}

/// `aff(ℝ) = span{x, y}` with `[x, y] = x` and `Jx = y`.
pub fn affine_line() -> Result<CatalogEntry> {
    let g = LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, unit(2, 0))])?;
    let j = ComplexStructure::new(LinearMap::from_i64(&[&[0, -1], &[1, 0]]))?;
    Ok(CatalogEntry::build("affR", g, vec![j], expect(true, None, 0, 1))?.with_model(AssociativeAlgebra::reals()))
}

/// Heisenberg algebra `h_n`, basis `x_1, y_1, …, x_n, y_n, z` with `[x_i, y_i] = z`.
pub fn heisenberg(n: usize) -> Result<LieAlgebra> {
    let dim = 2 * n + 1;
    let mut basis = Vec::with_capacity(dim);
    for i in 1..=n {
        basis.push(format!("x{i}"));
        basis.push(format!("y{i}"));
    }
    basis.push("z".into());
    let brackets: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1, unit(dim, dim - 1))).collect();
    LieAlgebra::from_brackets(basis, &brackets)
}

/// `ℝ × h_n`, basis `w, z, x_1, y_1, …`, with `Jz = w` and `Jx_i = y_i`.
pub fn heisenberg_example(n: usize) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(Error::HypothesisViolated("ℝ × h_n needs n ≥ 1".into()));
    }
    let dim = 2 * n + 2;
    let mut basis = names(&["w", "z"]);
    for i in 1..=n {
        basis.push(format!("x{i}"));
        basis.push(format!("y{i}"));
    }
    let brackets: Vec<_> = (0..n).map(|i| (2 + 2 * i, 3 + 2 * i, unit(dim, 1))).collect();
    let g = LieAlgebra::from_brackets(basis, &brackets)?;
    let mut j = LinearMap::zeros(dim, dim);
    // Jz = w, Jw = −z
    j.set(0, 1, rat(1));
    j.set(1, 0, rat(-1));
    for i in 0..n {
        let (x, y) = (2 + 2 * i, 3 + 2 * i);
        j.set(y, x, rat(1));
        j.set(x, y, rat(-1));
    }
    let j = ComplexStructure::new(j)?;
    Ok(CatalogEntry::build(format!("RxH{n}"), g, vec![j], expect(true, Some(2), 2, 1))?
        .with_model(AssociativeAlgebra::trivial(1)))
}

/// `aff(ℝ) ⊕ ℝ^{2m}`, a Lie algebra with one-dimensional commutator.
pub fn affine_line_plus_abelian(m: usize) -> Result<CatalogEntry> {
    let base = affine_line()?;
    let extra: Vec<String> = (1..=2 * m).map(|i| format!("u{i}")).collect();
    let g = base.algebra.direct_sum(&LieAlgebra::abelian_named(extra));
    let j = base.structures[0].matrix().block_diag(&LinearMap::standard_rotation(m));
    let j = ComplexStructure::new(j)?;
    let id = if m == 1 { "S2".to_string() } else { format!("affR+R{}", 2 * m) };
    Ok(CatalogEntry::build(id, g, vec![j], expect(true, None, 2 * m, 1))?.with_model(AssociativeAlgebra::reals()))
}

fn affine_entry(id: &str, a: AssociativeAlgebra, expected: ExpectedProperties) -> Result<CatalogEntry> {
    let g = aff(&a)?;
    let j = standard_j(a.dim());
    Ok(CatalogEntry::build(id, g, vec![j], expected)?.with_model(a))
}

fn complex_affine_entry(id: &str, c: ComplexAlgebraStructure, expected: ExpectedProperties) -> Result<CatalogEntry> {
    let g = aff(c.base())?;
    let structures = vec![standard_j(c.base().dim()), standard_k(&c, KConvention::NegateFirst)];
    let mut entry = CatalogEntry::build(id, g, structures, expected)?.with_model(c.base().clone());
    entry.complex_model = Some(c);
    Ok(entry)
}

/// The four-dimensional algebras carrying abelian complex structures.
pub const FOUR_DIM_IDS: [&str; 7] = ["S0", "S1", "S2", "S8", "S9", "S10", "S11"];

pub fn four_dim(id: &str) -> Result<CatalogEntry> {
    match id {
        "S0" => {
            let g = LieAlgebra::abelian(4);
            let j = ComplexStructure::new(LinearMap::standard_rotation(2))?;
            Ok(CatalogEntry::build("S0", g, vec![j], expect(true, Some(1), 4, 0))?
                .with_model(AssociativeAlgebra::trivial(0)))
        }
        "S1" => {
            let mut e = heisenberg_example(1)?;
            e.id = "S1".into();
            Ok(e)
        }
        "S2" => affine_line_plus_abelian(1),
        "S8" => {
            let r = affine_line()?;
            let second = r.algebra.clone().with_names(names(&["x2", "y2"]))?;
            let g = r.algebra.clone().with_names(names(&["x1", "y1"]))?.direct_sum(&second);
            let jm = r.structures[0].matrix();
            let j = ComplexStructure::new(jm.block_diag(jm))?;
            Ok(CatalogEntry::build("S8", g, vec![j], expect(true, None, 0, 2))?.with_model(AssociativeAlgebra::diag2()))
        }
        "S9" => affine_entry("S9", AssociativeAlgebra::jordan2(), expect(true, None, 0, 2)),
        "S10" => affine_entry("S10", AssociativeAlgebra::split2(), expect(true, None, 0, 2)),
        "S11" => complex_affine_entry("S11", ComplexAlgebraStructure::complexes(), expect(true, None, 0, 2)),
        _ => Err(Error::UnknownName(id.to_string())),
    }
}

/// `aff(A)` for the `k`-dimensional complex Toeplitz algebra, with its hypercomplex pair.
pub fn toeplitz_entry(k: usize) -> Result<CatalogEntry> {
    let c = toeplitz_algebra(k)?;
    complex_affine_entry(&format!("toeplitz-{k}"), c, expect(true, Some(k), 4, 2 * (k - 1)))
}

/// Algebra `span{x_j, y_j} ⊕ v` with `[x_j, v] = T_j J_v v`, `[y_j, v] = T_j v`
/// and `J x_j = y_j`, `J|_v = J_v`.
pub fn example_family(k: usize, n: usize, ts: &[LinearMap], jv: &LinearMap) -> Result<CatalogEntry> {
    let dv = 2 * n;
    if jv.rows() != dv || jv.cols() != dv {
        return Err(Error::ShapeMismatch { left: (dv, dv), right: (jv.rows(), jv.cols()) });
    }
    if !jv.squares_to_minus_identity() {
        return Err(Error::NotAComplexStructure);
    }
    if ts.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: ts.len() });
    }
    if let Some(t) = ts.iter().find(|t| t.rows() != dv || t.cols() != dv) {
        return Err(Error::ShapeMismatch { left: (dv, dv), right: (t.rows(), t.cols()) });
    }
    for a in 0..k {
        for b in 0..k {
            if a < b && !ts[a].commutator(&ts[b])?.is_zero() {
                return Err(Error::NonCommutingFamily(a + 1, b + 1));
            }
            if !family_pair_compatible(&ts[a], &ts[b], jv)? {
                return Err(Error::CompatibilityViolation(a + 1, b + 1));
            }
        }
    }
    let dim = 2 * k + dv;
    let mut basis = Vec::with_capacity(dim);
    for i in 1..=k {
        basis.push(format!("x{i}"));
        basis.push(format!("y{i}"));
    }
    basis.extend((1..=dv).map(|i| format!("v{i}")));
    let embed = |w: Vector| {
        let mut out = vec![Rational::zero(); dim];
        out[2 * k..].clone_from_slice(&w);
        out
    };
    let mut brackets = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        let tj = t.try_mul(jv)?;
        for b in 0..dv {
            brackets.push((2 * i, 2 * k + b, embed(tj.column(b))));
            brackets.push((2 * i + 1, 2 * k + b, embed(t.column(b))));
        }
    }
    let g = LieAlgebra::from_brackets(basis, &brackets)?;
    let mut j = LinearMap::zeros(dim, dim);
    for i in 0..k {
        j.set(2 * i + 1, 2 * i, Rational::one());
        j.set(2 * i, 2 * i + 1, -Rational::one());
    }
    for a in 0..dv {
        for b in 0..dv {
            j.set(2 * k + a, 2 * k + b, jv.get(a, b).clone());
        }
    }
    let j = ComplexStructure::new(j)?;
    let v = Subspace::span(dim, (2 * k..dim).map(|i| unit(dim, i)).collect())?;
    if !g.commutator_subalgebra().is_subspace_of(&v)? {
        return Err(Error::Certificate("commutator not contained in v".into()));
    }
    let expected = ExpectedProperties { abelian: Some(true), solvable: Some(true), ..Default::default() };
    CatalogEntry::build(format!("family-{k}-{n}"), g, vec![j], expected)
}

/// `T_a T_b = −T_a J T_b J`.
pub fn family_pair_compatible(ta: &LinearMap, tb: &LinearMap, jv: &LinearMap) -> Result<bool> {
    let lhs = ta.try_mul(tb)?;
    let rhs = -&ta.try_mul(jv)?.try_mul(tb)?.try_mul(jv)?;
    Ok(lhs == rhs)
}

/// Family with `J_v` the standard rotation and `T_i = J_v^{i−1}`.
pub fn example_family_default(k: usize, n: usize) -> Result<CatalogEntry> {
    let jv = LinearMap::standard_rotation(n);
    let mut ts = Vec::with_capacity(k);
    let mut t = LinearMap::identity(2 * n);
    for _ in 0..k {
        ts.push(t.clone());
        t = t.try_mul(&jv)?;
    }
    example_family(k, n, &ts, &jv)
}

/// Free two-step nilpotent algebra of rank `n`: `[v_i, v_j] = z_ij` for `i < j`.
pub fn free_two_step(n: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::HypothesisViolated("free two-step algebra needs rank n ≥ 2".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let dim = n + pairs.len();
    let mut basis: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    basis.extend(pairs.iter().map(|(i, j)| format!("z{}{}", i + 1, j + 1)));
    let brackets: Vec<_> = pairs.iter().enumerate().map(|(p, &(i, j))| (i, j, unit(dim, n + p))).collect();
    let g = LieAlgebra::from_brackets(basis, &brackets)?;
    let expected = ExpectedProperties {
        solvable: Some(true),
        nilpotent: Some(true),
        nilpotency_class: Some(2),
        dim_center: Some(pairs.len()),
        dim_commutator: Some(pairs.len()),
        ..Default::default()
    };
    CatalogEntry::build(format!("free2step-{n}"), g, vec![], expected)
}

/// `s = ℝa ⊕ n` with `[a, x] = D x`; `D` must be a derivation of `n`.
pub fn derivation_extension(n: &LieAlgebra, d: &LinearMap) -> Result<CatalogEntry> {
    if let Some((i, j)) = n.derivation_defect(d)? {
        return Err(Error::NotADerivation(i, j));
    }
    let m = n.dim();
    let dim = m + 1;
    let shift = |v: &Vector| {
        let mut out = vec![Rational::zero(); dim];
        out[1..].clone_from_slice(v);
        out
    };
    let mut brackets = Vec::new();
    for i in 0..m {
        brackets.push((0, i + 1, shift(&d.column(i))));
        for j in i + 1..m {
            brackets.push((i + 1, j + 1, shift(n.structure_constants(i, j))));
        }
    }
    let mut basis = vec!["a".to_string()];
    basis.extend(n.basis_names().iter().cloned());
    let g = LieAlgebra::from_brackets(basis, &brackets)?;
    if d.is_invertible() {
        let ideal = Subspace::span(dim, (1..dim).map(|i| unit(dim, i)).collect())?;
        if !ideal.is_subspace_of(&g.commutator_subalgebra())? {
            return Err(Error::Certificate("nonsingular derivation but n ⊄ [s, s]".into()));
        }
    }
    let expected = ExpectedProperties { solvable: Some(n.is_solvable()), ..Default::default() };
    CatalogEntry::build("derivation-ext", g, vec![], expected)
}

/// Grading derivation of `h_n`: identity on `x_i, y_i` and `2` on `z`.
pub fn heisenberg_grading(n: usize) -> LinearMap {
    let dim = 2 * n + 1;
    LinearMap::from_fn(dim, dim, |i, j| match (i == j, i == dim - 1) {
        (true, true) => rat(2),
        (true, false) => rat(1),
        _ => Rational::zero(),
    })
}

/// Identifiers accepted by [`by_id`], in listing order.
pub fn catalog_ids() -> Vec<String> {
    let mut ids: Vec<String> = FOUR_DIM_IDS.iter().map(|s| s.to_string()).collect();
    ids.extend(
        [
            "affR", "RxH1", "RxH2", "toeplitz-1", "toeplitz-2", "toeplitz-3", "toeplitz-4", "toeplitz-5", "family-1-1",
            "family-2-1", "family-1-2", "free2step-2", "free2step-3", "free2step-4", "derext-R2", "derext-h1", "derext-h2",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    ids
}

/// Looks up an entry: one of [`FOUR_DIM_IDS`], `affR`, `RxH<n>`, `toeplitz-<k>`,
/// `family-<k>-<n>`, `free2step-<n>`, `derext-R2`, `derext-h<n>`.
pub fn by_id(id: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownName(id.to_string());
    let number = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if FOUR_DIM_IDS.contains(&id) {
        return four_dim(id);
    }
    if id == "affR" {
        return affine_line();
    }
    if let Some(n) = id.strip_prefix("RxH") {
        return heisenberg_example(number(n)?);
    }
    if let Some(k) = id.strip_prefix("toeplitz-") {
        return toeplitz_entry(number(k)?);
    }
    if let Some(rest) = id.strip_prefix("family-") {
        let (k, n) = rest.split_once('-').ok_or_else(unknown)?;
        let (k, n) = (number(k)?, number(n)?);
        if k == 0 || n == 0 {
            return Err(Error::HypothesisViolated("family needs k, n ≥ 1".into()));
        }
        return example_family_default(k, n);
    }
    if let Some(n) = id.strip_prefix("free2step-") {
        return free_two_step(number(n)?);
    }
    if id == "derext-R2" {
        let mut e = derivation_extension(&LieAlgebra::abelian(2), &LinearMap::identity(2))?;
        e.id = id.into();
        return Ok(e);
    }
    if let Some(n) = id.strip_prefix("derext-h") {
        let n = number(n)?;
        if n == 0 {
            return Err(unknown());
        }
        let mut e = derivation_extension(&heisenberg(n)?, &heisenberg_grading(n))?;
        e.id = id.into();
        return Ok(e);
    }
    Err(unknown())
}
