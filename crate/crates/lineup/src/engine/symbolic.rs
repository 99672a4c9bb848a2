//! Symbolic occupation vectors: the d-by-r integer matrix M whose column j
//! is the multiplicity vector of the j-th configuration in a lineup, so the
//! vertex is M·w for any weight vector w.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::enumerate::Lineup;
use crate::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccupationMatrix {
    /// Row i gives the multiplicities of orbital i across the r configurations.
    pub matrix: Vec<Vec<i64>>,
}

impl OccupationMatrix {
    pub fn orbital_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn lineup_length(&self) -> usize {
        self.matrix.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.matrix[i]
    }

    /// Exact evaluation M·w.
    pub fn evaluate(&self, w: &[Rat]) -> Vec<Rat> {
        assert_eq!(w.len(), self.lineup_length());
        self.matrix
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (&m, wj) in row.iter().zip(w.iter()) {
                    if m != 0 {
                        acc += Rat::from(Int::from(m)) * wj;
                    }
                }
                acc
            })
            .collect()
    }

    /// Human-readable coordinates like `1`, `w1+w2+w3`, `2+w1`, `0`.
    pub fn render_symbolic(&self) -> Vec<String> {
        self.matrix.iter().map(|row| render_row(row)).collect()
    }
}

fn render_row(row: &[i64]) -> String {
    // Split off the largest constant part: min over j of row[j] contributes
    // min * (w1+...+wr) = min, since the weights sum to one.
    let c = *row.iter().min().unwrap_or(&0);
    let mut parts: Vec<String> = Vec::new();
    if c != 0 {
        parts.push(c.to_string());
    }
    for (j, &m) in row.iter().enumerate() {
        let m = m - c;
        if m == 1 {
            parts.push(format!("w{}", j + 1));
        } else if m > 1 {
            parts.push(format!("{}w{}", m, j + 1));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// The symbolic occupation vector of a lineup: column j equals the
/// multiplicity vector of the j-th configuration.
pub fn occupation_vector(lineup: &Lineup) -> OccupationMatrix {
    let d = lineup.params().d as usize;
    let r = lineup.seq().len();
    let mut matrix = vec![vec![0i64; r]; d];
    for (j, cfg) in lineup.seq().iter().enumerate() {
        for (i, &m) in cfg.multiplicities().iter().enumerate() {
            matrix[i][j] = m as i64;
        }
    }
    OccupationMatrix { matrix }
}

/// The default strictly decreasing weight w_j = 2(r+1-j)/(r(r+1)); facet
/// decisions are independent of the choice, this one just provides concrete
/// points.
pub fn default_weight(r: usize) -> Vec<Rat> {
    let denom = Int::from(r as i64) * Int::from(r as i64 + 1);
    (1..=r)
        .map(|j| Rat::new(Int::from(2 * (r as i64 + 1 - j as i64)), denom.clone()))
        .collect()
}

/// Validate a weight vector: length r, strictly decreasing, positive, sum 1.
pub fn check_weights(w: &[Rat], r: usize) -> crate::Result<()> {
    use crate::error::Error;
    if w.len() != r {
        return Err(Error::BadWeights(format!(
            "expected {} weights, got {}",
            r,
            w.len()
        )));
    }
    if w.iter().any(|x| !x.is_positive()) {
        return Err(Error::BadWeights("weights must be positive".into()));
    }
    for pair in w.windows(2) {
        if pair[0] <= pair[1] {
            return Err(Error::BadWeights(
                "weights must be strictly decreasing".into(),
            ));
        }
    }
    let sum: Rat = w.iter().cloned().sum();
    if !sum.is_one() {
        return Err(Error::BadWeights(format!(
            "weights must sum to 1, got {sum}"
        )));
    }
    Ok(())
}
