use serde::{Deserialize, Serialize};

use super::LieAlgebra;
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`
    Derived,
    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`
    LowerCentral,
}

/// Terms of a series up to stabilization.
///
/// `terms[stabilized_at]` is the last entry and equals its successor; earlier entries
/// strictly decrease in dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
}

impl SeriesReport {
    pub(super) fn compute(g: &LieAlgebra, kind: SeriesKind) -> Self {
        let full = Subspace::full(g.dim());
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().expect("series is nonempty");
            let next = match kind {
                SeriesKind::Derived => g.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => g.bracket_subspaces(&full, last),
            }
            .expect("subspaces live in g");
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let stabilized_at = terms.len() - 1;
        Self { kind, terms, stabilized_at }
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}
