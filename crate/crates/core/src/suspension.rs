//! Meander suspension: rotate the curve by half a turn and add two new
//! extreme crossings. Inner label `j` becomes `j + 1`; the new extremes are
//! labels `1` and `n + 2` (0 and `n + 1` in zero-based display).

use serde::Serialize;

use crate::attractor::AttractorModel;
use crate::error::{Error, Result};
use crate::perm::{IndexBase, SturmPermutation};
use crate::zeronum::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionResult {
    pub original: SturmPermutation,
    pub suspended: SturmPermutation,
}

impl SuspensionResult {
    /// Label in the suspension of inner label `j`.
    pub fn inner_label(&self, j: usize) -> usize {
        j + 1
    }

    pub fn to_text(&self, base: IndexBase) -> String {
        self.suspended.to_text(base)
    }
}

/// Suspends a Sturm permutation: `σ̃(1) = 1`, `σ̃(n + 2) = n + 2` and
/// `σ̃(1 + j) = σ(n + 1 - j) + 1`.
pub fn suspend(p: &SturmPermutation) -> Result<SuspensionResult> {
    if let Some(reason) = p.sturm_defect() {
        return Err(Error::NotSturm { reason });
    }
    let n = p.len();
    let mut map = Vec::with_capacity(n + 2);
    map.push(1);
    map.extend((1..=n).map(|j| p.sigma(n + 1 - j) + 1));
    map.push(n + 2);
    let suspended =
        SturmPermutation::from_map(map).expect("suspension of a bijection is a bijection");
    Ok(SuspensionResult {
        original: p.clone(),
        suspended,
    })
}

/// Applies [`suspend`] `times` times.
pub fn suspend_times(p: &SturmPermutation, times: usize) -> Result<SturmPermutation> {
    let mut current = p.clone();
    for _ in 0..times {
        current = suspend(&current)?.suspended;
    }
    if let Some(reason) = current.sturm_defect() {
        return Err(Error::NotSturm { reason });
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuspensionCheck {
    pub name: &'static str,
    pub pass: bool,
    /// First counterexample, if any.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuspensionReport {
    pub original: Vec<usize>,
    pub suspended: Vec<usize>,
    pub checks: Vec<SuspensionCheck>,
}

impl SuspensionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

struct Checker {
    checks: Vec<SuspensionCheck>,
}

impl Checker {
    fn record(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(SuspensionCheck {
            name,
            pass: failure.is_none(),
            detail: failure,
        });
    }
}

/// Checks the Morse shift, zero number shift, extreme rows, connection
/// isomorphism and the target set / minimax correspondence for `p`.
pub fn verify_suspension(p: &SturmPermutation) -> Result<SuspensionReport> {
    let result = suspend(p)?;
    let n = p.len();
    let last = n + 2;
    let mut checker = Checker { checks: Vec::new() };

    let defect = result.suspended.sturm_defect();
    checker.record("suspended_is_sturm", defect.map(str::to_string));
    if defect.is_some() {
        return Ok(SuspensionReport {
            original: p.map().to_vec(),
            suspended: result.suspended.map().to_vec(),
            checks: checker.checks,
        });
    }

    let base = AttractorModel::build(p)?;
    let susp = AttractorModel::build(&result.suspended)?;
    let (m, mt) = (base.morse(), susp.morse());
    let (z, zt) = (base.z(), susp.z());

    checker.record(
        "extreme_morse_zero",
        (mt.get(1) != 0 || mt.get(last) != 0)
            .then(|| format!("extreme Morse indices {} and {}", mt.get(1), mt.get(last))),
    );
    checker.record(
        "inner_morse_shift",
        (1..=n)
            .find(|&j| mt.get(j + 1) != m.get(j) + 1)
            .map(|j| format!("label {j}: {} -> {}", m.get(j), mt.get(j + 1))),
    );

    let mut inner_failure = None;
    'outer: for j in 1..=n {
        for k in 1..=n {
            if j != k && zt.get(j + 1, k + 1) != z.get(j, k) + 1 {
                inner_failure = Some(format!(
                    "labels {j},{k}: z = {} but suspended z = {}",
                    z.get(j, k),
                    zt.get(j + 1, k + 1)
                ));
                break 'outer;
            }
        }
    }
    checker.record("inner_zero_shift", inner_failure);

    checker.record(
        "extreme_zero_rows",
        (2..=last)
            .find(|&k| zt.get(1, k) != 0)
            .map(|k| format!("z(1,{k}) = {}", zt.get(1, k)))
            .or_else(|| {
                (1..last)
                    .find(|&j| zt.get(j, last) != 0)
                    .map(|j| format!("z({j},{last}) = {}", zt.get(j, last)))
            }),
    );

    let shifted: Vec<(usize, usize)> = base
        .connections()
        .iter()
        .map(|&(j, k)| (j + 1, k + 1))
        .collect();
    let inner: Vec<(usize, usize)> = susp
        .connections()
        .iter()
        .copied()
        .filter(|&(j, k)| j != 1 && j != last && k != 1 && k != last)
        .collect();
    checker.record(
        "connection_isomorphism",
        (shifted != inner).then(|| format!("expected {shifted:?}, got {inner:?}")),
    );

    let mut cone_failure = None;
    let mut target_failure = None;
    let mut minimax_failure = None;
    for o in (1..=n).filter(|&o| m.get(o) > 0) {
        let ot = o + 1;
        let expected_cone = [(Sign::Minus, vec![1]), (Sign::Plus, vec![last])];
        for (sign, want) in expected_cone {
            let got = susp.target_set(ot, 0, sign)?;
            if got != want && cone_failure.is_none() {
                cone_failure = Some(format!("O={o}, k=0{sign}: {got:?}"));
            }
        }
        for k in 0..m.get(o) {
            for sign in Sign::BOTH {
                let image: Vec<usize> =
                    base.target_set(o, k, sign)?.iter().map(|w| w + 1).collect();
                let got = susp.target_set(ot, k + 1, sign)?;
                if image != got && target_failure.is_none() {
                    target_failure = Some(format!("O={o}, k={k}{sign}: {image:?} vs {got:?}"));
                }
                if let (Ok(a), Ok(b)) = (base.minimax(o, k, sign), susp.minimax(ot, k + 1, sign)) {
                    let mapped =
                        [a.closest_x0, a.closest_x1, a.distant_x0, a.distant_x1].map(|w| w + 1);
                    let got = [b.closest_x0, b.closest_x1, b.distant_x0, b.distant_x1];
                    if mapped != got && minimax_failure.is_none() {
                        minimax_failure =
                            Some(format!("O={o}, k={k}{sign}: {mapped:?} vs {got:?}"));
                    }
                }
            }
        }
    }
    checker.record("cone_targets", cone_failure);
    checker.record("target_set_correspondence", target_failure);
    checker.record("minimax_correspondence", minimax_failure);

    Ok(SuspensionReport {
        original: p.map().to_vec(),
        suspended: result.suspended.map().to_vec(),
        checks: checker.checks,
    })
}
