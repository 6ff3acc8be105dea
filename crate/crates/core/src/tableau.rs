use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// A row-strict filling of a Young diagram: row lengths weakly decreasing,
/// every row strictly increasing. Columns are unconstrained; `is_standard`
/// tells the two flavors apart.
///
/// JSON encoding is the bare rows, e.g. `[[1,3,6],[2,5],[4]]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("rows must be nonempty".into()));
        }
        if !rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|&v| v == 0) {
                return Err(Error::InvalidTableau(format!("row {} has a zero entry", i + 1)));
            }
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not strictly increasing: {:?}",
                    i + 1,
                    row
                )));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("row lengths are weakly decreasing by construction")
    }

    /// True iff columns strictly increase top to bottom and the entries are
    /// exactly {1..n}. Rows already increase by construction.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n];
        for row in &self.rows {
            for &v in row {
                if v > n || seen[v - 1] {
                    return false;
                }
                seen[v - 1] = true;
            }
        }
        for pair in self.rows.windows(2) {
            let (above, below) = (&pair[0], &pair[1]);
            if below.iter().zip(above).any(|(b, a)| b <= a) {
                return false;
            }
        }
        true
    }

    /// Concatenation of the rows from bottom to top, left to right.
    /// Errors unless the entries are a permutation of {1..n}.
    pub fn row_reading_word(&self) -> Result<Permutation> {
        let word: Vec<usize> = self.rows.iter().rev().flatten().copied().collect();
        Permutation::new(word)
            .map_err(|e| Error::InvalidTableau(format!("reading word is not a permutation: {}", e)))
    }

    /// The transposed filling. Errors if the transpose is not row-strict
    /// (it always is when `self` is standard).
    pub fn transposed(&self) -> Result<Tableau> {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect();
        Tableau::new(rows)
    }

    /// Plain grid rendering, one row per line.
    pub fn ascii(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| format!("{:>width$}", v, width = width))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Vec<Vec<usize>> {
        t.rows
    }
}
