//! Box-ball states and their dynamics.
//!
//! A state assigns the balls 1..n injectively to boxes indexed by the
//! naturals. One move sends each ball, smallest label first, to the nearest
//! empty box strictly to its right; the vacated box is immediately available
//! to later balls. `step_direct` implements that rule literally and
//! `step_carrier` implements the carrier algorithm; the two must agree on
//! every state, which the test suites check exhaustively at desk scale.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::Tableau;

/// A finite-support box-ball configuration in canonical trimmed form:
/// `offset` is the absolute index of the leftmost occupied box and
/// `content` starts and ends with a ball. Equality is (offset, content).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BbsStateRepr", into = "BbsStateRepr")]
pub struct BbsState {
    offset: usize,
    content: Vec<Option<usize>>,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct BbsStateRepr {
    offset: usize,
    content: Vec<Option<usize>>,
}

impl BbsState {
    pub fn new(offset: usize, content: Vec<Option<usize>>) -> Result<Self> {
        if content.is_empty() {
            return Err(Error::InvalidState("content is empty".into()));
        }
        if content.first().unwrap().is_none() || content.last().unwrap().is_none() {
            return Err(Error::InvalidState(
                "content must be trimmed (start and end with a ball)".into(),
            ));
        }
        let n = content.iter().flatten().count();
        let mut seen = vec![false; n];
        for &b in content.iter().flatten() {
            if b < 1 || b > n {
                return Err(Error::InvalidState(format!(
                    "ball label {} out of range 1..={}",
                    b, n
                )));
            }
            if seen[b - 1] {
                return Err(Error::InvalidState(format!("ball label {} repeated", b)));
            }
            seen[b - 1] = true;
        }
        Ok(BbsState { offset, content, n })
    }

    /// The time-0 state of `w`: its one-line notation in boxes 0..n-1.
    pub fn from_permutation(w: &Permutation) -> Self {
        BbsState {
            offset: 0,
            content: w.word().iter().map(|&v| Some(v)).collect(),
            n: w.n(),
        }
    }

    /// Parses compact renderings such as `"ee45e2136"` or `"..45.2136"`
    /// (single-digit labels only). Leading empties become the offset.
    pub fn from_ascii(s: &str) -> Result<Self> {
        let mut boxes = Vec::new();
        for (i, c) in s.chars().enumerate() {
            match c {
                '.' | 'e' => boxes.push(None),
                '1'..='9' => boxes.push(Some(c.to_digit(10).unwrap() as usize)),
                _ => {
                    return Err(Error::InvalidState(format!(
                        "invalid character {:?} at position {}",
                        c,
                        i + 1
                    )))
                }
            }
        }
        let lead = boxes
            .iter()
            .position(|c| c.is_some())
            .ok_or_else(|| Error::InvalidState("no balls".into()))?;
        let tail = boxes.iter().rposition(|c| c.is_some()).unwrap();
        BbsState::new(lead, boxes[lead..=tail].to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn content(&self) -> &[Option<usize>] {
        &self.content
    }

    /// The balls in box order with empties dropped.
    pub fn ball_order_word(&self) -> Permutation {
        Permutation::new(self.content.iter().flatten().copied().collect())
            .expect("state content holds each label once")
    }

    /// One BBS move by the direct rule: balls 1, 2, ..., n in turn jump to
    /// the nearest empty box strictly to their right.
    pub fn step_direct(&self) -> BbsState {
        let mut boxes = self.content.clone();
        boxes.extend(std::iter::repeat(None).take(self.n + 1));
        let mut pos = vec![usize::MAX; self.n + 1];
        for (i, cell) in boxes.iter().enumerate() {
            if let Some(b) = cell {
                pos[*b] = i;
            }
        }
        for ball in 1..=self.n {
            let p = pos[ball];
            let q = (p + 1..boxes.len())
                .find(|&j| boxes[j].is_none())
                .expect("padding guarantees an empty box to the right");
            boxes[p] = None;
            boxes[q] = Some(ball);
            pos[ball] = q;
        }
        Self::retrim(self.offset, boxes)
    }

    /// One BBS move by the carrier algorithm. Agrees with `step_direct`.
    pub fn step_carrier(&self) -> BbsState {
        let ejected = carrier_eject(&self.content, self.n);
        Self::retrim(self.offset, ejected)
    }

    /// The raw ejected sequence of the carrier algorithm, untrimmed: it
    /// occupies boxes starting at this state's offset.
    pub fn carrier_eject_sequence(&self) -> Vec<Option<usize>> {
        carrier_eject(&self.content, self.n)
    }

    /// Step-by-step record of the carrier algorithm for trace output.
    pub fn carrier_trace(&self) -> Vec<CarrierStep> {
        let mut steps = Vec::new();
        carrier_run(&self.content, self.n, Some(&mut steps));
        steps
    }

    fn retrim(base_offset: usize, boxes: Vec<Option<usize>>) -> BbsState {
        let lead = boxes.iter().position(|c| c.is_some()).expect("at least one ball");
        let tail = boxes.iter().rposition(|c| c.is_some()).unwrap();
        let content = boxes[lead..=tail].to_vec();
        let n = content.iter().flatten().count();
        BbsState { offset: base_offset + lead, content, n }
    }

    /// Maximal consecutive increasing runs of balls, left to right, with the
    /// number of empty boxes preceding each run (0 for the first).
    fn runs(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut gap = 0usize;
        for cell in &self.content {
            match cell {
                None => gap += 1,
                Some(b) => {
                    match out.last_mut() {
                        Some((_, run)) if gap == 0 && *run.last().unwrap() < *b => run.push(*b),
                        _ => out.push((gap, vec![*b])),
                    }
                    gap = 0;
                }
            }
        }
        out
    }

    /// The configuration array: scanning right to left, each increasing run
    /// becomes a row; a gap of g empty boxes shifts the next row below g
    /// spaces to the left. Offsets are normalized so the minimum is 0.
    pub fn configuration_array(&self) -> SkewArray {
        let runs = self.runs();
        let m = runs.len();
        let mut offsets = vec![0i64; m];
        for i in 1..m {
            // row i is the run left of row i-1; the gap recorded on run
            // m-1-(i-1) separates them
            let g = runs[m - i].0 as i64;
            offsets[i] = offsets[i - 1] - g;
        }
        let min = offsets.iter().copied().min().unwrap_or(0);
        let rows = (0..m)
            .map(|i| SkewRow {
                offset: (offsets[i] - min) as usize,
                entries: runs[m - 1 - i].1.clone(),
            })
            .collect();
        SkewArray { rows }
    }

    /// Steady iff the configuration array has weakly decreasing row lengths
    /// and strictly increasing columns.
    pub fn is_steady(&self) -> bool {
        let array = self.configuration_array();
        array.rows_weakly_decreasing() && array.columns_strictly_increasing()
    }

    /// Absolute rendering with `.` for empty boxes, e.g. `"....452..136"`.
    /// Labels above 9 are rendered space-separated.
    pub fn ascii(&self) -> String {
        if self.n <= 9 {
            let mut s = ".".repeat(self.offset);
            for cell in &self.content {
                match cell {
                    Some(b) => s.push_str(&b.to_string()),
                    None => s.push('.'),
                }
            }
            s
        } else {
            let mut toks: Vec<String> = vec![".".into(); self.offset];
            toks.extend(self.content.iter().map(|c| match c {
                Some(b) => b.to_string(),
                None => ".".into(),
            }));
            toks.join(" ")
        }
    }
}

impl fmt::Display for BbsState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

impl fmt::Debug for BbsState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BbsState({})", self.ascii())
    }
}

impl TryFrom<BbsStateRepr> for BbsState {
    type Error = Error;
    fn try_from(r: BbsStateRepr) -> Result<Self> {
        BbsState::new(r.offset, r.content)
    }
}

impl From<BbsState> for BbsStateRepr {
    fn from(s: BbsState) -> BbsStateRepr {
        BbsStateRepr { offset: s.offset, content: s.content }
    }
}

/// One row of a configuration array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRow {
    pub offset: usize,
    pub entries: Vec<usize>,
}

/// A skew-shaped array of increasing rows with per-row offsets
/// (minimum offset 0). Row 0 is the top row (the rightmost run).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewArray {
    rows: Vec<SkewRow>,
}

impl SkewArray {
    pub fn rows(&self) -> &[SkewRow] {
        &self.rows
    }

    pub fn rows_weakly_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].entries.len() >= w[1].entries.len())
    }

    /// Entries strictly increase down every absolute column.
    pub fn columns_strictly_increasing(&self) -> bool {
        let cols = self
            .rows
            .iter()
            .map(|r| r.offset + r.entries.len())
            .max()
            .unwrap_or(0);
        for c in 0..cols {
            let mut prev: Option<usize> = None;
            for row in &self.rows {
                if c >= row.offset && c < row.offset + row.entries.len() {
                    let v = row.entries[c - row.offset];
                    if let Some(p) = prev {
                        if p >= v {
                            return false;
                        }
                    }
                    prev = Some(v);
                }
            }
        }
        true
    }
}

/// Phase of a carrier-algorithm step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarrierPhase {
    Init,
    Insertion,
    Flushing,
}

/// Snapshot of the carrier algorithm after one insertion (or at start).
#[derive(Clone, Debug)]
pub struct CarrierStep {
    pub phase: CarrierPhase,
    /// Everything ejected so far, in ejection order.
    pub ejected: Vec<Option<usize>>,
    /// Carrier contents, weakly increasing; `None` renders as e.
    pub carrier: Vec<Option<usize>>,
    /// Input elements not yet inserted.
    pub remaining: Vec<Option<usize>>,
}

fn carrier_eject(content: &[Option<usize>], n: usize) -> Vec<Option<usize>> {
    carrier_run(content, n, None)
}

// Algorithm: e := n+1; carrier := n copies of e. For each element p of B,
// eject the smallest carrier element strictly larger than p and put p in its
// place; if none exists (p = e), eject the leftmost element and append p.
// Then flush with e's until the carrier is all e.
fn carrier_run(
    content: &[Option<usize>],
    n: usize,
    mut trace: Option<&mut Vec<CarrierStep>>,
) -> Vec<Option<usize>> {
    let e = n + 1;
    let mut carrier: Vec<usize> = vec![e; n];
    let mut out: Vec<Option<usize>> = Vec::new();

    let as_cell = |v: usize| if v == e { None } else { Some(v) };
    let record = |trace: &mut Option<&mut Vec<CarrierStep>>,
                  phase: CarrierPhase,
                  out: &[Option<usize>],
                  carrier: &[usize],
                  remaining: &[Option<usize>]| {
        if let Some(t) = trace {
            t.push(CarrierStep {
                phase,
                ejected: out.to_vec(),
                carrier: carrier.iter().map(|&v| as_cell(v)).collect(),
                remaining: remaining.to_vec(),
            });
        }
    };

    let mut insert = |carrier: &mut Vec<usize>, p: usize| -> usize {
        let k = carrier.partition_point(|&c| c <= p);
        if k < carrier.len() {
            // smallest element strictly larger than p; replacing it with p
            // keeps the carrier weakly increasing
            let s = carrier[k];
            carrier[k] = p;
            s
        } else {
            // p = e exceeds everything: eject the leftmost, shift, append
            let s = carrier.remove(0);
            carrier.push(p);
            s
        }
    };

    record(&mut trace, CarrierPhase::Init, &out, &carrier, content);
    for (i, cell) in content.iter().enumerate() {
        let p = cell.unwrap_or(e);
        let s = insert(&mut carrier, p);
        out.push(as_cell(s));
        record(&mut trace, CarrierPhase::Insertion, &out, &carrier, &content[i + 1..]);
    }
    while carrier.iter().any(|&c| c != e) {
        let s = insert(&mut carrier, e);
        out.push(as_cell(s));
        record(&mut trace, CarrierPhase::Flushing, &out, &carrier, &[]);
    }
    out
}

/// Smallest t >= 0 at which the system containing `w` is steady, together
/// with the steady state itself.
///
/// Steps via the direct rule; debug builds cross-check every step against
/// the carrier algorithm. Panics if 3n moves do not reach steady state,
/// which would be an implementation bug, not a property of the input.
pub fn run_to_steady(w: &Permutation) -> (BbsState, usize) {
    let cap = 3 * w.n();
    let mut state = BbsState::from_permutation(w);
    for t in 0..=cap {
        if state.is_steady() {
            return (state, t);
        }
        let next = state.step_direct();
        debug_assert_eq!(
            next,
            state.step_carrier(),
            "direct and carrier steppers diverged at t={} from w={}",
            t,
            w
        );
        state = next;
    }
    panic!(
        "no steady state within 3n = {} moves from w={}; this is a bug",
        cap, w
    );
}

/// Number of BBS moves for `w` to first reach steady state.
pub fn steady_state_time(w: &Permutation) -> usize {
    run_to_steady(w).1
}

/// The soliton decomposition SD(w): run to steady state and stack the
/// solitons, rightmost on the first row. Row-strict, possibly nonstandard.
pub fn soliton_decomposition(w: &Permutation) -> Tableau {
    let (state, _) = run_to_steady(w);
    let rows = state
        .configuration_array()
        .rows()
        .iter()
        .map(|r| r.entries.clone())
        .collect();
    Tableau::new(rows).expect("steady-state runs form a row-strict tableau")
}
