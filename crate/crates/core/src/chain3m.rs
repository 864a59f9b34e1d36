//! Thurston polytope of a closed 3-manifold from a chain complex with one
//! 0-cell, two 1-cells, two 2-cells and one 3-cell.
//!
//! With boundary matrices `a` (column of `d1`), `b` (`d2`) and `c` (row of
//! `d3`), the Thurston polytope is `P(b[3-i][3-j]) - P(c[i]) - P(a[j])` for
//! any `i, j` with `c[i]` and `a[j]` nonzero. The smallest such pair is used;
//! strict mode evaluates every admissible pair and checks that they agree.
//! Vanishing is decided in the free group ring.

use thiserror::Error;

use crate::grothendieck::{GrothElement, GrothError};
use crate::lattice::IntegralPolytope;
use crate::words::{newton_polytope, AbelianizationMap, FreeWordSum, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("formula inapplicable: every {0} entry vanishes")]
    Inapplicable(&'static str),
    #[error("entry b[{row}][{col}] vanishes for the pair (i, j) = ({i}, {j})")]
    VanishingB {
        i: usize,
        j: usize,
        row: usize,
        col: usize,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Groth(#[from] GrothError),
}

/// The boundary data of the cell structure, with 1-based indexing in the
/// accessors to match the usual matrix notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexData {
    pub a: [FreeWordSum; 2],
    pub b: [[FreeWordSum; 2]; 2],
    pub c: [FreeWordSum; 2],
    pub abelianization: AbelianizationMap,
}

/// One evaluation of the formula.
#[derive(Debug, Clone)]
pub struct PairEvaluation {
    pub i: usize,
    pub j: usize,
    pub result: Result<GrothElement, ChainError>,
}

#[derive(Debug, Clone)]
pub struct ChainResult {
    pub element: GrothElement,
    pub i: usize,
    pub j: usize,
    /// A polytope representing the element, when there is one.
    pub representative: Option<IntegralPolytope>,
    /// Present in strict mode: every admissible pair and whether all
    /// successful evaluations agree.
    pub strict: Option<(Vec<PairEvaluation>, bool)>,
}

impl ChainComplexData {
    fn newton(&self, f: &FreeWordSum) -> Option<IntegralPolytope> {
        newton_polytope(f, &self.abelianization).ok()
    }

    /// 1-based indices of nonvanishing entries.
    fn nonvanishing(&self, entries: &[FreeWordSum; 2]) -> Vec<usize> {
        (1..=2)
            .filter(|&k| self.newton(&entries[k - 1]).is_some())
            .collect()
    }

    /// `P(b[3-i][3-j]) - P(c[i]) - P(a[j])`.
    pub fn evaluate(&self, i: usize, j: usize) -> Result<GrothElement, ChainError> {
        let (row, col) = (3 - i, 3 - j);
        let pb = self
            .newton(&self.b[row - 1][col - 1])
            .ok_or(ChainError::VanishingB { i, j, row, col })?;
        let pc = newton_polytope(&self.c[i - 1], &self.abelianization)?;
        let pa = newton_polytope(&self.a[j - 1], &self.abelianization)?;
        let subtracted = pc.minkowski_sum(&pa).map_err(GrothError::from)?;
        Ok(GrothElement::new(pb, subtracted)?)
    }

    pub fn thurston_from_chain(&self, strict: bool) -> Result<ChainResult, ChainError> {
        let cs = self.nonvanishing(&self.c);
        let as_ = self.nonvanishing(&self.a);
        let (&i, &j) = match (cs.first(), as_.first()) {
            (None, _) => return Err(ChainError::Inapplicable("c")),
            (_, None) => return Err(ChainError::Inapplicable("a")),
            (Some(i), Some(j)) => (i, j),
        };
        let element = self.evaluate(i, j)?;
        let representative = element.as_polytope()?;
        let strict = strict.then(|| {
            let evals: Vec<PairEvaluation> = cs
                .iter()
                .flat_map(|&i| as_.iter().map(move |&j| (i, j)))
                .map(|(i, j)| PairEvaluation {
                    i,
                    j,
                    result: self.evaluate(i, j),
                })
                .collect();
            let agree = evals.iter().all(|e| match &e.result {
                Ok(g) => g.g_equal(&element).unwrap_or(false),
                Err(_) => false,
            });
            (evals, agree)
        });
        Ok(ChainResult {
            element,
            i,
            j,
            representative,
            strict,
        })
    }
}
