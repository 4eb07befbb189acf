//! Non-existence tests for abelian complex structures, and a bounded search for them.
//!
//! A `RuledOut` verdict always carries evidence that [`ObstructionReport::reverify`] can
//! recompute from the algebra alone. The search never concludes non-existence.

use std::ops::ControlFlow;

use num_traits::{One, Zero};

use crate::catalog::free_two_step;
use crate::complex::{is_abelian, ComplexStructure};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{commutant, Frame, LinearMap, Matrix, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    RuledOut,
    Admits(ComplexStructure),
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    Codim1,
    Commutant,
    OddDimension,
    SearchWitness,
    SearchExhausted,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Codim1 => "codim1",
            Reason::Commutant => "commutant",
            Reason::OddDimension => "odd-dimension",
            Reason::SearchWitness => "search-witness",
            Reason::SearchExhausted => "search-exhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    Codim { dim: usize, commutator_dim: usize },
    Commutant { j_span_dim: usize, commutant_dim: usize, family: Box<JzFamily> },
    OddDimension { dim: usize },
    Search { candidates: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    pub algebra_id: String,
    pub verdict: Verdict,
    pub reason: Reason,
    pub evidence: Evidence,
}

impl ObstructionReport {
    fn new(algebra_id: &str, verdict: Verdict, reason: Reason, evidence: Evidence) -> Self {
        Self { algebra_id: algebra_id.to_string(), verdict, reason, evidence }
    }

    pub fn is_ruled_out(&self) -> bool {
        self.verdict == Verdict::RuledOut
    }

    pub fn witness(&self) -> Option<&ComplexStructure> {
        match &self.verdict {
            Verdict::Admits(j) => Some(j),
            _ => None,
        }
    }

    pub fn verdict_str(&self) -> &'static str {
        match self.verdict {
            Verdict::RuledOut => "ruled-out",
            Verdict::Admits(_) => "admits",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    /// Recomputes the evidence behind a definite verdict from `s`.
    ///
    /// `Inconclusive` reports make no claim and always pass.
    pub fn reverify(&self, s: &LieAlgebra) -> Result<bool> {
        match &self.verdict {
            Verdict::Inconclusive => Ok(true),
            Verdict::Admits(j) => is_abelian(s, j),
            Verdict::RuledOut => Ok(match &self.evidence {
                Evidence::OddDimension { dim } => *dim == s.dim() && dim % 2 == 1,
                Evidence::Codim { dim, commutator_dim } => {
                    *dim == s.dim() && *commutator_dim == s.commutator_subalgebra().dim() && dim - commutator_dim == 1 && *dim > 2
                }
                Evidence::Commutant { j_span_dim, commutant_dim, family } => {
                    let fresh = jz_family(s, &family.gram)?;
                    let m = fresh.v_basis.len();
                    fresh.j_span_dim() == *j_span_dim
                        && *j_span_dim == m * (m - 1) / 2
                        && m >= 3
                        && fresh.commutant()?.dim() == *commutant_dim
                        && *commutant_dim == 1
                }
                Evidence::Search { .. } => false,
            }),
        }
    }
}

fn odd_dimension(id: &str, s: &LieAlgebra) -> Option<ObstructionReport> {
    (s.dim() % 2 == 1).then(|| {
        ObstructionReport::new(id, Verdict::RuledOut, Reason::OddDimension, Evidence::OddDimension { dim: s.dim() })
    })
}

/// Codimension-one test: a Lie algebra whose commutator has codimension one admits an
/// abelian complex structure only if it is `aff(ℝ)`.
pub fn codim1_obstruction(id: &str, s: &LieAlgebra) -> Result<ObstructionReport> {
    let dim = s.dim();
    let commutator_dim = s.commutator_subalgebra().dim();
    let evidence = Evidence::Codim { dim, commutator_dim };
    if dim - commutator_dim == 1 && dim > 2 && s.is_solvable() {
        return Ok(ObstructionReport::new(id, Verdict::RuledOut, Reason::Codim1, evidence));
    }
    if dim == 2 && commutator_dim == 1 {
        let j = aff_r_structure(s)?;
        return Ok(ObstructionReport::new(id, Verdict::Admits(j), Reason::Codim1, evidence));
    }
    Ok(ObstructionReport::new(id, Verdict::Inconclusive, Reason::Codim1, evidence))
}

/// For a non-abelian two-dimensional algebra: `x` spans `[s, s]`, `[x, y] = x`, `Jx = y`.
fn aff_r_structure(s: &LieAlgebra) -> Result<ComplexStructure> {
    let x = s.commutator_subalgebra().basis_vectors().remove(0);
    let y0 = (0..2).map(|k| s.unit(k)).find(|v| Frame::new(2, vec![x.clone(), v.clone()]).is_ok()).expect("x ≠ 0");
    let lambda = s.bracket(&x, &y0)?.iter().zip(&x).find(|(_, xi)| !xi.is_zero()).map(|(b, xi)| b / xi).expect("x ≠ 0");
    let y: Vector = y0.iter().map(|v| v / &lambda).collect();
    let p = Matrix::from_columns(&[x, y], 2)?;
    let j = ComplexStructure::new(LinearMap::standard_rotation(1))?.conjugate(&p)?;
    debug_assert!(is_abelian(s, &j)?);
    Ok(j)
}

/// The maps `j_z` of a two-step nilpotent algebra with an inner product.
///
/// `n = z ⊕ v` with `z` the center and `v` its orthogonal complement. Each map acts on `v`
/// and is written in the basis `v_basis`; `gram_v` is the inner product restricted to `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct JzFamily {
    pub v: Subspace,
    pub z: Subspace,
    pub v_basis: Vec<Vector>,
    pub z_basis: Vec<Vector>,
    pub maps: Vec<LinearMap>,
    pub gram: LinearMap,
    pub gram_v: LinearMap,
}

impl JzFamily {
    /// Dimension of `span{j_z}`.
    pub fn j_span_dim(&self) -> usize {
        Subspace::span(self.v_basis.len().pow(2), self.maps.iter().map(|m| m.as_flat().to_vec()).collect())
            .map(|s| s.dim())
            .unwrap_or(0)
    }

    /// Endomorphisms of `v` commuting with every `j_z`.
    pub fn commutant(&self) -> Result<Subspace> {
        let m = self.v_basis.len();
        let span = Subspace::span(m * m, self.maps.iter().map(|j| j.as_flat().to_vec()).collect())?;
        let basis = span.basis_vectors().into_iter().map(|f| Matrix::from_flat(m, m, f)).collect::<Result<Vec<_>>>()?;
        commutant(&basis, m)
    }

    /// Checks skew-symmetry and `⟨j_z v, w⟩ = ⟨z, [v, w]⟩` on basis pairs.
    pub fn verify(&self, n: &LieAlgebra) -> Result<bool> {
        let ip = |a: &[Rational], b: &[Rational]| -> Result<Rational> {
            let gb = self.gram.apply(b)?;
            Ok(a.iter().zip(&gb).map(|(x, y)| x * y).sum())
        };
        let to_s = |coords: &[Rational]| -> Vector {
            let mut out = vec![Rational::zero(); n.dim()];
            for (c, v) in coords.iter().zip(&self.v_basis) {
                for (o, x) in out.iter_mut().zip(v) {
                    *o += c * x;
                }
            }
            out
        };
        for (z, jz) in self.z_basis.iter().zip(&self.maps) {
            let g = self.gram_v.try_mul(jz)?;
            if g != -&g.transpose() {
                return Ok(false);
            }
            for (a, va) in self.v_basis.iter().enumerate() {
                let image = to_s(&jz.column(a));
                for vb in &self.v_basis {
                    if ip(&image, vb)? != ip(z, &n.bracket(va, vb)?)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

pub fn jz_family(n: &LieAlgebra, gram: &LinearMap) -> Result<JzFamily> {
    let dim = n.dim();
    if gram.rows() != dim || gram.cols() != dim {
        return Err(Error::ShapeMismatch { left: (dim, dim), right: (gram.rows(), gram.cols()) });
    }
    if n.nilpotency_class() != Some(2) {
        return Err(Error::NotTwoStepNilpotent);
    }
    if !gram.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let z = n.center();
    let z_basis = z.basis_vectors();
    let constraints: Vec<Vector> = z_basis.iter().map(|zv| gram.transpose().apply(zv)).collect::<Result<_>>()?;
    let v = Matrix::from_rows(constraints, dim)?.kernel();
    let v_basis = v.basis_vectors();
    let m = v_basis.len();
    let vmat = Matrix::from_columns(&v_basis, dim)?;
    let gram_v = vmat.transpose().try_mul(gram)?.try_mul(&vmat)?;
    let gram_v_inv = gram_v.inverse()?;
    let mut maps = Vec::with_capacity(z_basis.len());
    for zv in &z_basis {
        let gz = gram.transpose().apply(zv)?;
        // B[a][b] = ⟨z, [v_a, v_b]⟩ and j_z = −G_v⁻¹ B.
        let mut b = LinearMap::zeros(m, m);
        for a in 0..m {
            for c in 0..m {
                let br = n.bracket(&v_basis[a], &v_basis[c])?;
                b.set(a, c, br.iter().zip(&gz).map(|(x, y)| x * y).sum());
            }
        }
        maps.push(-&gram_v_inv.try_mul(&b)?);
    }
    let family = JzFamily { v, z, v_basis, z_basis, maps, gram: gram.clone(), gram_v };
    if !family.verify(n)? {
        return Err(Error::Certificate("j_z maps fail their defining identity".into()));
    }
    Ok(family)
}

/// Commutant criterion for a two-step nilpotent algebra: when the `j_z` span every skew map of
/// `v` and `dim v ≥ 3`, only multiples of the identity commute with all of them, so no complex
/// structure on `v` can.
pub fn commutant_obstruction(id: &str, n: &LieAlgebra, gram: &LinearMap) -> Result<ObstructionReport> {
    let family = jz_family(n, gram)?;
    let m = family.v_basis.len();
    let j_span_dim = family.j_span_dim();
    let commutant_dim = family.commutant()?.dim();
    let verdict = if m >= 3 && j_span_dim == m * (m - 1) / 2 && commutant_dim == 1 {
        Verdict::RuledOut
    } else {
        Verdict::Inconclusive
    };
    let evidence = Evidence::Commutant { j_span_dim, commutant_dim, family: Box::new(family) };
    Ok(ObstructionReport::new(id, verdict, Reason::Commutant, evidence))
}

/// The commutant criterion on the free two-step nilpotent algebra of rank `n ≥ 3`, with the
/// identity inner product.
pub fn free_two_step_obstruction(rank: usize) -> Result<ObstructionReport> {
    if rank < 3 {
        return Err(Error::HypothesisViolated(format!("free two-step obstruction needs rank ≥ 3, got {rank}")));
    }
    let entry = free_two_step(rank)?;
    let dim = entry.algebra.dim();
    commutant_obstruction(&entry.id, &entry.algebra, &LinearMap::identity(dim))
}

/// `J` is abelian iff `J² = −I` and `[Jx, y] + [x, Jy] = 0`; the second condition is linear.
fn abelian_linear_conditions(s: &LieAlgebra) -> Result<Subspace> {
    let n = s.dim();
    let mut rows = Vec::new();
    for x in 0..n {
        for y in x..n {
            // [J e_x, e_y] + [e_x, J e_y] = Σ_k J_kx [e_k, e_y] + J_ky [e_x, e_k]
            for out in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    row[k * n + x] += &s.structure_constants(k, y)[out];
                    row[k * n + y] += &s.structure_constants(x, k)[out];
                }
                rows.push(row);
            }
        }
    }
    Ok(Matrix::from_rows(rows, n * n)?.kernel())
}

type PairingVisitor<'a> = dyn FnMut(&[(usize, usize)]) -> ControlFlow<()> + 'a;

/// Calls `visit` with every ordered pairing of `0..n` (each pair `(a, b)` means `Je_a = e_b`),
/// until it breaks.
fn for_each_pairing(free: &[usize], pairs: &mut Vec<(usize, usize)>, visit: &mut PairingVisitor) -> ControlFlow<()> {
    let Some(&a) = free.first() else {
        return visit(pairs);
    };
    for idx in 1..free.len() {
        let b = free[idx];
        let rest: Vec<usize> = free.iter().copied().filter(|&c| c != a && c != b).collect();
        for pair in [(a, b), (b, a)] {
            pairs.push(pair);
            let flow = for_each_pairing(&rest, pairs, visit);
            pairs.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// Basis ordered by the filtration `z ∩ [s,s] ⊂ z ⊂ z + [s,s] ⊂ s`.
fn adapted_basis(s: &LieAlgebra) -> Result<Vec<Vector>> {
    let n = s.dim();
    let z = s.center();
    let c = s.commutator_subalgebra();
    let layers = [z.intersect(&c)?, z.clone(), z.sum(&c)?, Subspace::full(n)];
    let mut basis: Vec<Vector> = Vec::new();
    for layer in layers {
        for v in layer.basis_vectors() {
            let mut trial = basis.clone();
            trial.push(v.clone());
            if Subspace::span(n, trial)?.dim() > basis.len() {
                basis.push(v);
            }
        }
    }
    Ok(basis)
}

/// Bounded search over signed pairings of basis vectors, first in the given basis and then in a
/// basis adapted to the center and commutator. Candidates are tested against the linear form of
/// the abelian condition and the winner is re-checked directly.
pub fn search_abelian_j(id: &str, s: &LieAlgebra, budget: usize) -> Result<ObstructionReport> {
    if let Some(report) = odd_dimension(id, s) {
        return Ok(report);
    }
    let n = s.dim();
    let conditions = abelian_linear_conditions(s)?;
    let standard = LinearMap::identity(n);
    let adapted = Matrix::from_columns(&adapted_basis(s)?, n)?;
    let bases = if adapted == standard { vec![standard] } else { vec![standard, adapted] };
    let mut tried = 0usize;
    let mut found = None;
    for p in &bases {
        let p_inv = p.inverse()?;
        let mut error = None;
        let mut visit = |pairs: &[(usize, usize)]| {
            if tried >= budget {
                return ControlFlow::Break(());
            }
            tried += 1;
            let mut j0 = LinearMap::zeros(n, n);
            for &(a, b) in pairs {
                j0.set(b, a, Rational::one());
                j0.set(a, b, -Rational::one());
            }
            let j = match p.try_mul(&j0).and_then(|m| m.try_mul(&p_inv)) {
                Ok(j) => j,
                Err(e) => {
                    error = Some(e);
                    return ControlFlow::Break(());
                }
            };
            match conditions.contains(j.as_flat()) {
                Ok(true) => {
                    found = Some(j);
                    ControlFlow::Break(())
                }
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => {
                    error = Some(e);
                    ControlFlow::Break(())
                }
            }
        };
        let _ = for_each_pairing(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut visit);
        if let Some(e) = error {
            return Err(e);
        }
        if found.is_some() || tried >= budget {
            break;
        }
    }
    let evidence = Evidence::Search { candidates: tried };
    match found {
        Some(j) => {
            let j = ComplexStructure::new(j)?;
            if !is_abelian(s, &j)? {
                return Err(Error::Certificate("search witness is not abelian".into()));
            }
            Ok(ObstructionReport::new(id, Verdict::Admits(j), Reason::SearchWitness, evidence))
        }
        None => Ok(ObstructionReport::new(id, Verdict::Inconclusive, Reason::SearchExhausted, evidence)),
    }
}

/// Runs the tests in order of strength: odd dimension, codimension one, the commutant
/// criterion (two-step nilpotent input only), then the search.
pub fn obstruct(id: &str, s: &LieAlgebra, gram: Option<&LinearMap>, budget: usize) -> Result<ObstructionReport> {
    if let Some(report) = odd_dimension(id, s) {
        return Ok(report);
    }
    let codim = codim1_obstruction(id, s)?;
    if codim.verdict != Verdict::Inconclusive {
        return Ok(codim);
    }
    if s.nilpotency_class() == Some(2) {
        let identity = LinearMap::identity(s.dim());
        let report = commutant_obstruction(id, s, gram.unwrap_or(&identity))?;
        if report.is_ruled_out() {
            return Ok(report);
        }
    }
    search_abelian_j(id, s, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{affine_line, by_id, four_dim, heisenberg};
    use crate::linalg::rat;

    #[test]
    fn codim1_examples() {
        for id in ["derext-R2", "derext-h1", "derext-h2"] {
            let e = by_id(id).unwrap();
            let r = codim1_obstruction(id, &e.algebra).unwrap();
            assert!(r.is_ruled_out(), "{id}");
            assert!(r.reverify(&e.algebra).unwrap());
        }
        let aff_r = affine_line().unwrap();
        let r = codim1_obstruction("affR", &aff_r.algebra).unwrap();
        assert!(r.witness().is_some());
        assert!(r.reverify(&aff_r.algebra).unwrap());
        let s1 = four_dim("S1").unwrap();
        assert_eq!(codim1_obstruction("S1", &s1.algebra).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn codim1_witness_in_other_basis() {
        // [e0, e1] = 2e0 + 2e1
        let s = LieAlgebra::from_brackets(vec!["a".into(), "b".into()], &[(0, 1, vec![rat(2), rat(2)])]).unwrap();
        let r = codim1_obstruction("s", &s).unwrap();
        assert!(is_abelian(&s, r.witness().unwrap()).unwrap());
    }

    #[test]
    fn jz_for_heisenberg() {
        let h = heisenberg(1).unwrap();
        let f = jz_family(&h, &LinearMap::identity(3)).unwrap();
        assert_eq!(f.maps, vec![LinearMap::from_i64(&[&[0, -1], &[1, 0]])]);
        let doubled = jz_family(&h, &LinearMap::identity(3).scale(&rat(2))).unwrap();
        assert!(doubled.verify(&h).unwrap());
    }

    #[test]
    fn jz_for_free_rank3() {
        let e = free_two_step(3).unwrap();
        let f = jz_family(&e.algebra, &LinearMap::identity(6)).unwrap();
        // j_{z_12} = E_21 − E_12
        assert_eq!(f.maps[0], LinearMap::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]));
        assert_eq!(f.j_span_dim(), 3);
    }

    #[test]
    fn jz_errors() {
        let aff_r = affine_line().unwrap();
        assert_eq!(jz_family(&aff_r.algebra, &LinearMap::identity(2)), Err(Error::NotTwoStepNilpotent));
        let h = heisenberg(1).unwrap();
        let bad = LinearMap::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        assert_eq!(jz_family(&h, &bad), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn free_two_step_ruled_out() {
        for (rank, span) in [(3, 3), (4, 6)] {
            let r = free_two_step_obstruction(rank).unwrap();
            assert!(r.is_ruled_out());
            match &r.evidence {
                Evidence::Commutant { j_span_dim, commutant_dim, .. } => assert_eq!((*j_span_dim, *commutant_dim), (span, 1)),
                other => panic!("unexpected evidence {other:?}"),
            }
            assert!(r.reverify(&free_two_step(rank).unwrap().algebra).unwrap());
        }
        assert!(free_two_step_obstruction(2).is_err());
    }

    #[test]
    fn pairing_count() {
        let mut count = 0;
        let _ = for_each_pairing(&(0..4).collect::<Vec<_>>(), &mut Vec::new(), &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 12);
    }

    #[test]
    fn search_examples() {
        for id in ["S8", "S1"] {
            let e = four_dim(id).unwrap();
            let r = search_abelian_j(id, &e.algebra, 10_000).unwrap();
            assert!(r.witness().is_some(), "{id}");
        }
        let padded = free_two_step(3).unwrap().algebra.direct_sum(&LieAlgebra::abelian(2));
        let r = search_abelian_j("free3+R2", &padded, 200).unwrap();
        assert_eq!(r.reason, Reason::SearchExhausted);
        let r = search_abelian_j("h1", &heisenberg(1).unwrap(), 10).unwrap();
        assert!(r.is_ruled_out());
    }

    #[test]
    fn combined_never_contradicts_catalog() {
        for id in crate::catalog::catalog_ids() {
            let e = by_id(&id).unwrap();
            if e.structures.is_empty() {
                continue;
            }
            let r = obstruct(&id, &e.algebra, None, 50).unwrap();
            assert!(!r.is_ruled_out(), "{id}");
        }
    }
}
