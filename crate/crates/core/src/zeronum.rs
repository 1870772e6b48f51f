//! Zero numbers of equilibrium differences.
//!
//! Two independent routes are provided: the descending boundary recursion
//! ([`z_matrix`]) and the Sturm-Liouville formula from Morse index, quadrant
//! parity and crossing number ([`z_pair_nsl`]). The second one only looks at
//! the labels between `j` and `k`, which is what makes windowed analysis
//! ([`window_z`]) possible without knowing the rest of the meander.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::meander::Quadrant;
use crate::perm::{alternating, sign_diff, SturmPermutation};

/// Rows are filled in parallel from this size on.
const PARALLEL_ROWS: usize = 64;

/// Symmetric matrix of zero numbers `z(v_k - v_j)` indexed by label.
///
/// The diagonal carries Morse indices for display only; a zero number of an
/// equilibrium with itself is never read from it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ZeroMatrix {
    n: usize,
    #[serde(rename = "rows")]
    data: Vec<Vec<i64>>,
}

impl ZeroMatrix {
    fn from_rows(data: Vec<Vec<i64>>) -> Self {
        ZeroMatrix {
            n: data.len(),
            data,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Entry for labels `j, k` (1-based).
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> i64 {
        self.data[j - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.data
    }

    /// Square block for the labels `first..first + len`.
    pub fn block(&self, first: usize, len: usize) -> ZeroMatrix {
        let data = (first..first + len)
            .map(|j| (first..first + len).map(|k| self.get(j, k)).collect())
            .collect();
        ZeroMatrix::from_rows(data)
    }

    /// Zero number of `w - base` together with the sign of that difference at `x = 0`.
    pub fn signed(&self, base: usize, w: usize) -> Result<SignedZero> {
        for label in [base, w] {
            if label == 0 || label > self.n {
                return Err(Error::LabelOutOfRange { label, n: self.n });
            }
        }
        if base == w {
            return Err(Error::SameLabel { label: base });
        }
        Ok(SignedZero {
            z: self.get(base, w),
            sign: if w > base { Sign::Plus } else { Sign::Minus },
        })
    }

    /// Rows of space separated integers, newline terminated.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ZeroMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let tokens: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `self` multiplied by `(-1)^k`.
    pub fn times_parity(self, k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Zero number with the sign of the difference at `x = 0`, written `z±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignedZero {
    pub z: i64,
    pub sign: Sign,
}

impl fmt::Display for SignedZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.z, self.sign)
    }
}

/// Zero number matrix from the descending recursion in `k`, seeded by the
/// boundary rows `z(1, ·) = z(·, n) = 0`.
pub fn z_matrix(p: &SturmPermutation) -> Result<ZeroMatrix> {
    if let Some(reason) = p.sturm_defect() {
        return Err(Error::NotSturm { reason });
    }
    Ok(z_matrix_unchecked(p))
}

pub(crate) fn z_matrix_unchecked(p: &SturmPermutation) -> ZeroMatrix {
    let n = p.len();
    let morse = p.morse_indices();
    let row = |j: usize| -> Vec<i64> {
        // upper part of row j: entries k > j
        let mut upper = vec![0i64; n + 1];
        if j > 1 && j < n {
            let at = p.position(j);
            for k in (j + 1..n).rev() {
                let jump = sign_diff(p.position(k + 1), at) - sign_diff(p.position(k), at);
                upper[k] = upper[k + 1] + alternating(k) * jump / 2;
            }
        }
        upper
    };
    let uppers: Vec<Vec<i64>> = if n >= PARALLEL_ROWS {
        (1..=n).into_par_iter().map(row).collect()
    } else {
        (1..=n).map(row).collect()
    };
    let mut data = vec![vec![0i64; n]; n];
    for j in 1..=n {
        data[j - 1][j - 1] = morse.get(j);
        for k in j + 1..=n {
            let v = uppers[j - 1][k];
            data[j - 1][k - 1] = v;
            data[k - 1][j - 1] = v;
        }
    }
    ZeroMatrix::from_rows(data)
}

/// Zero number `z(v_k - v_j)` from the Sturm-Liouville formula
/// `i(v_j) + c(j, k; j)`, minus one when the arc leaving `j` is even.
///
/// Evaluated on `(min, max)` of the two labels. `p` must be Sturm.
pub fn z_pair_nsl(p: &SturmPermutation, j: usize, k: usize) -> Result<i64> {
    p.check_label(j)?;
    p.check_label(k)?;
    if j == k {
        return Err(Error::SameLabel { label: j });
    }
    let (lo, hi) = (j.min(k), j.max(k));
    let morse = p.morse_indices();
    let correction = match p.quadrant_parity(lo)? {
        Quadrant::Odd => 0,
        Quadrant::Even => 1,
    };
    Ok(morse.get(lo) - correction + p.crossing_value(lo, hi, lo))
}

pub fn signed_z(p: &SturmPermutation, base: usize, w: usize) -> Result<SignedZero> {
    z_matrix(p)?.signed(base, w)
}

/// Direction in which the curve crosses the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Crossing {
    Up,
    Down,
}

/// A contiguous run of `L ≥ 2` labels known only through the relative axis
/// order of its members and the Morse index of its first label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeanderWindow {
    /// `rank[t - 1]` is the axis rank, among window labels, of window label `t`.
    rank: Vec<usize>,
    anchor_morse: i64,
}

impl MeanderWindow {
    pub fn new(rank: Vec<usize>, anchor_morse: i64) -> Result<Self> {
        let len = rank.len();
        if len < 2 {
            return Err(Error::InvalidWindow(format!("length {len} is below 2")));
        }
        if anchor_morse < 0 {
            return Err(Error::InvalidWindow(format!(
                "anchor Morse index {anchor_morse} is negative"
            )));
        }
        let mut seen = vec![false; len];
        for &r in &rank {
            if r == 0 || r > len || std::mem::replace(&mut seen[r - 1], true) {
                return Err(Error::InvalidWindow(format!(
                    "relative order is not a bijection of 1..={len}"
                )));
            }
        }
        Ok(MeanderWindow { rank, anchor_morse })
    }

    /// Builds a window from the window labels listed left to right along the axis.
    pub fn from_axis_order(order: &[usize], anchor_morse: i64) -> Result<Self> {
        let len = order.len();
        let mut rank = vec![0usize; len];
        for (idx, &label) in order.iter().enumerate() {
            if label == 0 || label > len || rank[label - 1] != 0 {
                return Err(Error::InvalidWindow(format!(
                    "axis order is not a bijection of 1..={len}"
                )));
            }
            rank[label - 1] = idx + 1;
        }
        MeanderWindow::new(rank, anchor_morse)
    }

    /// Window over labels `first..first + len` of a full permutation, with the
    /// anchor taken from its Morse vector.
    pub fn from_permutation(p: &SturmPermutation, first: usize, len: usize) -> Result<Self> {
        if first == 0 || len < 2 || first + len - 1 > p.len() {
            return Err(Error::InvalidWindow(format!(
                "labels {first}..{} do not fit in 1..={}",
                first + len.max(1) - 1,
                p.len()
            )));
        }
        let mut positions: Vec<(usize, usize)> =
            (0..len).map(|t| (p.position(first + t), t)).collect();
        positions.sort_unstable();
        let mut rank = vec![0usize; len];
        for (r, &(_, t)) in positions.iter().enumerate() {
            rank[t] = r + 1;
        }
        MeanderWindow::new(rank, p.morse_indices().get(first))
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn anchor_morse(&self) -> i64 {
        self.anchor_morse
    }

    /// Axis rank of window label `t` (1-based).
    pub fn rank(&self, t: usize) -> usize {
        self.rank[t - 1]
    }

    /// Window labels listed by increasing axis rank.
    pub fn axis_order(&self) -> Vec<usize> {
        let mut order = vec![0; self.len()];
        for (t, &r) in self.rank.iter().enumerate() {
            order[r - 1] = t + 1;
        }
        order
    }

    pub fn anchor_direction(&self) -> Crossing {
        if self.anchor_morse % 2 == 0 {
            Crossing::Up
        } else {
            Crossing::Down
        }
    }

    // arc t -> t + 1 around window label l; the alternation sign comes from the
    // parity of the Morse index at t, which matches the parity of the global label
    fn crossing_step(&self, morse: &[i64], t: usize, l: usize) -> i64 {
        if l == t || l == t + 1 {
            return 0;
        }
        let at = self.rank(l);
        let jump = sign_diff(self.rank(t + 1), at) - sign_diff(self.rank(t), at);
        alternating(morse[t - 1].unsigned_abs() as usize) * jump / 2
    }
}

/// Morse indices of the window labels from the anchor by the half-winding recursion.
pub fn window_morse(win: &MeanderWindow) -> Result<Vec<i64>> {
    let mut morse = Vec::with_capacity(win.len());
    morse.push(win.anchor_morse);
    for t in 1..win.len() {
        let prev = morse[t - 1];
        let next = prev + alternating(prev as usize) * sign_diff(win.rank(t + 1), win.rank(t));
        if next < 0 {
            return Err(Error::InconsistentWindow(format!(
                "Morse index of window label {} would be {next}",
                t + 1
            )));
        }
        morse.push(next);
    }
    Ok(morse)
}

/// Zero numbers among the window labels, with Morse indices on the diagonal.
pub fn window_z(win: &MeanderWindow) -> Result<ZeroMatrix> {
    let morse = window_morse(win)?;
    let len = win.len();
    let mut data = vec![vec![0i64; len]; len];
    for a in 1..=len {
        data[a - 1][a - 1] = morse[a - 1];
        if a == len {
            continue;
        }
        let correction = if morse[a] > morse[a - 1] { 0 } else { 1 };
        let mut crossings = 0i64;
        for b in a + 1..=len {
            crossings += win.crossing_step(&morse, b - 1, a);
            let z = morse[a - 1] - correction + crossings;
            if z < 0 {
                return Err(Error::InconsistentWindow(format!(
                    "zero number between window labels {a} and {b} would be {z}"
                )));
            }
            data[a - 1][b - 1] = z;
            data[b - 1][a - 1] = z;
        }
    }
    Ok(ZeroMatrix::from_rows(data))
}
