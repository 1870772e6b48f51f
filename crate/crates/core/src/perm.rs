//! One-line permutations of `{1..n}` with `n` odd, their Morse recursion and
//! the Klein group generated by the two trivial equivalences.
//!
//! Conventions used across the crate:
//!
//! * a *label* `j` is the position of a crossing along the meander curve
//!   (the order of equilibria at `x = 0`);
//! * a *position* `k` is the left-to-right rank of a crossing on the
//!   horizontal axis (the order at `x = 1`);
//! * `sigma(k)` is the label found at axis position `k`, and
//!   `position(j) = sigma⁻¹(j)` is where label `j` sits on the axis.
//!
//! Everything is 1-based; [`IndexBase::Zero`] only changes parsing and display.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sign of `a - b` for two axis positions or labels.
pub(crate) fn sign_diff(a: usize, b: usize) -> i64 {
    (a as i64 - b as i64).signum()
}

/// `(-1)^e` for a non-negative exponent.
pub(crate) fn alternating(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// How integers in permutation text are numbered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexBase {
    #[default]
    One,
    Zero,
}

/// A bijection of `{1..n}` with `n` odd, stored together with its inverse.
///
/// The value is not necessarily dissipative, Morse or a meander; use
/// [`SturmPermutation::is_sturm`] to check the full characterization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SturmPermutation {
    // map[k - 1] = sigma(k); inv[j - 1] = sigma⁻¹(j)
    map: Vec<usize>,
    inv: Vec<usize>,
}

impl SturmPermutation {
    /// Builds a permutation from its 1-based one-line notation.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut inv = vec![0; n];
        for (idx, &value) in map.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::OutOfRange {
                    position: idx + 1,
                    value: value as i64,
                    n,
                });
            }
            if inv[value - 1] != 0 {
                return Err(Error::Duplicate {
                    position: idx + 1,
                    value,
                });
            }
            inv[value - 1] = idx + 1;
        }
        if n.is_multiple_of(2) {
            return Err(Error::EvenLength { position: n, n });
        }
        Ok(SturmPermutation { map, inv })
    }

    /// The identity permutation of size `n`.
    ///
    /// # Panics
    ///
    /// Panics if `n` is zero or even.
    pub fn identity(n: usize) -> Self {
        assert!(n % 2 == 1, "permutation size must be odd, got {n}");
        SturmPermutation {
            map: (1..=n).collect(),
            inv: (1..=n).collect(),
        }
    }

    /// Number of crossings `n`.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Label at axis position `k`.
    #[inline]
    pub fn sigma(&self, k: usize) -> usize {
        self.map[k - 1]
    }

    /// Axis position of label `j`.
    #[inline]
    pub fn position(&self, j: usize) -> usize {
        self.inv[j - 1]
    }

    /// One-line notation, `map()[k - 1] = sigma(k)`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Inverse one-line notation, `inverse_map()[j - 1] = sigma⁻¹(j)`.
    pub fn inverse_map(&self) -> &[usize] {
        &self.inv
    }

    pub(crate) fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.len() {
            Err(Error::LabelOutOfRange {
                label,
                n: self.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn inverse(&self) -> SturmPermutation {
        SturmPermutation {
            map: self.inv.clone(),
            inv: self.map.clone(),
        }
    }

    /// Conjugation by the order reversal `j ↦ n + 1 - j`.
    pub fn reversal_conjugate(&self) -> SturmPermutation {
        let n = self.len();
        let map = (1..=n).map(|k| n + 1 - self.sigma(n + 1 - k)).collect();
        let inv = (1..=n).map(|j| n + 1 - self.position(n + 1 - j)).collect();
        SturmPermutation { map, inv }
    }

    /// Fixes both end points.
    pub fn is_dissipative(&self) -> bool {
        self.map[0] == 1 && self.map[self.len() - 1] == self.len()
    }

    /// Morse numbers from the half-winding recursion, starting at `i_1 = 0`.
    ///
    /// Entries may be negative when the permutation is not Morse.
    pub fn morse_indices(&self) -> MorseVector {
        let n = self.len();
        let mut values = Vec::with_capacity(n);
        values.push(0i64);
        for j in 1..n {
            let step = alternating(j + 1) * sign_diff(self.position(j + 1), self.position(j));
            values.push(values[j - 1] + step);
        }
        MorseVector(values)
    }

    pub fn is_morse(&self) -> bool {
        self.morse_indices().is_nonnegative()
    }

    fn require_sturm(&self) -> Result<()> {
        match self.sturm_defect() {
            Some(reason) => Err(Error::NotSturm { reason }),
            None => Ok(()),
        }
    }

    /// Image under `x ↦ 1 - x`: the two boundary orders swap, so the
    /// permutation is inverted.
    pub fn apply_tau(&self) -> Result<SturmPermutation> {
        self.require_sturm()?;
        Ok(self.inverse())
    }

    /// Image under `u ↦ -u`: both boundary orders are reversed.
    pub fn apply_kappa(&self) -> Result<SturmPermutation> {
        self.require_sturm()?;
        Ok(self.reversal_conjugate())
    }

    /// The orbit `{p, τp, κp, τκp}` under the Klein group.
    pub fn klein_orbit(&self) -> Result<KleinOrbit> {
        self.require_sturm()?;
        let tau = self.inverse();
        let kappa = self.reversal_conjugate();
        let tau_kappa = kappa.inverse();
        Ok(KleinOrbit {
            members: [self.clone(), tau, kappa, tau_kappa],
        })
    }

    /// Space separated one-line notation in the requested numbering.
    pub fn to_text(&self, base: IndexBase) -> String {
        let shift = match base {
            IndexBase::One => 0,
            IndexBase::Zero => 1,
        };
        let tokens: Vec<String> = self.map.iter().map(|v| (v - shift).to_string()).collect();
        tokens.join(" ")
    }
}

impl fmt::Display for SturmPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(IndexBase::One))
    }
}

impl FromStr for SturmPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s, IndexBase::One)
    }
}

/// Parses whitespace- or comma-separated integers into a permutation candidate.
///
/// With [`IndexBase::Zero`] every value is shifted by one before validation.
pub fn parse_permutation(text: &str, base: IndexBase) -> Result<SturmPermutation> {
    let shift: i64 = match base {
        IndexBase::One => 0,
        IndexBase::Zero => 1,
    };
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::Empty);
    }
    let n = tokens.len();
    let mut map = Vec::with_capacity(n);
    for (idx, token) in tokens.iter().enumerate() {
        let raw: i64 = token.parse().map_err(|_| Error::NotInteger {
            position: idx + 1,
            token: token.to_string(),
        })?;
        let value = raw + shift;
        if value < 1 || value > n as i64 {
            return Err(Error::OutOfRange {
                position: idx + 1,
                value: raw,
                n,
            });
        }
        map.push(value as usize);
    }
    SturmPermutation::from_map(map)
}

/// Morse numbers indexed by meander label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseVector(Vec<i64>);

impl MorseVector {
    pub fn new(values: Vec<i64>) -> Self {
        MorseVector(values)
    }

    /// Morse index of label `j` (1-based).
    #[inline]
    pub fn get(&self, j: usize) -> i64 {
        self.0[j - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&i| i >= 0)
    }

    /// Largest Morse index, the attractor dimension.
    pub fn dimension(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for MorseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&tokens.join(" "))
    }
}

/// Orbit of a Sturm permutation under `⟨τ, κ⟩`, listed as `[p, τp, κp, τκp]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleinOrbit {
    pub members: [SturmPermutation; 4],
}

impl KleinOrbit {
    /// Distinct orbit members in ascending one-line order.
    pub fn distinct(&self) -> Vec<SturmPermutation> {
        let mut out = self.members.to_vec();
        out.sort();
        out.dedup();
        out
    }

    pub fn size(&self) -> usize {
        self.distinct().len()
    }

    /// Some group elements act trivially on this permutation.
    pub fn is_degenerate(&self) -> bool {
        self.size() < 4
    }
}
