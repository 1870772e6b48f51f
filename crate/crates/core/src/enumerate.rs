//! Exhaustive generation of Sturm permutations and the property harness that
//! runs every module invariant over the generated families.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::attractor::{AttractorModel, Boundary};
use crate::error::{Error, Result};
use crate::perm::{alternating, sign_diff, SturmPermutation};
use crate::suspension::{suspend, verify_suspension};
use crate::zeronum::{window_z, z_pair_nsl, MeanderWindow, Sign};

pub const DEFAULT_BOUND: usize = 11;

/// Largest size for which [`Engine::Auto`] uses the filter engine.
const FILTER_AUTO_MAX: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Test every permutation fixing `1` and `n`.
    Filter,
    /// Grow the curve label by label, pruning crossing arcs and negative Morse numbers.
    Backtrack,
    /// Filter up to size 7, backtracking above.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub bound: usize,
    pub engine: Engine,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            bound: DEFAULT_BOUND,
            engine: Engine::Auto,
        }
    }
}

/// All Sturm permutations of size `n` in lexicographic order of the one-line notation.
pub fn enumerate_sturm(n: usize) -> Result<Vec<SturmPermutation>> {
    enumerate_with(n, &EnumerationConfig::default())
}

pub fn enumerate_with(n: usize, config: &EnumerationConfig) -> Result<Vec<SturmPermutation>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength { position: n, n });
    }
    if n > config.bound {
        return Err(Error::BoundExceeded {
            n,
            bound: config.bound,
        });
    }
    let engine = match config.engine {
        Engine::Auto if n <= FILTER_AUTO_MAX => Engine::Filter,
        Engine::Auto => Engine::Backtrack,
        other => other,
    };
    Ok(match engine {
        Engine::Filter => filter_engine(n),
        _ => backtrack_engine(n),
    })
}

/// Rearranges `xs` into the next permutation in lexicographic order.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("pivot has a larger successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

fn filter_engine(n: usize) -> Vec<SturmPermutation> {
    let mut map: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let candidate = SturmPermutation::from_map(map.clone()).expect("valid bijection");
        if candidate.is_sturm() {
            out.push(candidate);
        }
        if n < 3 || !next_permutation(&mut map[1..n - 1]) {
            break;
        }
    }
    out
}

/// Search state while laying out the curve: `path[j]` is the axis position of
/// label `j`, arcs are kept per side as closed position intervals.
struct Builder {
    n: usize,
    path: Vec<usize>,
    used: Vec<bool>,
    arcs: [Vec<(usize, usize)>; 2],
    morse: Vec<i64>,
}

impl Builder {
    fn new(n: usize) -> Self {
        let mut used = vec![false; n + 1];
        used[1] = true;
        Builder {
            n,
            path: vec![0, 1],
            used,
            arcs: [Vec::new(), Vec::new()],
            morse: vec![0, 0],
        }
    }

    /// Tries to place label `j + 1` at axis position `q`; returns false if
    /// pruned, otherwise the state is extended and must be undone by [`Builder::pop`].
    fn push(&mut self, q: usize) -> bool {
        let j = self.path.len() - 1;
        let n = self.n;
        if self.used[q] || (q == n) != (j + 1 == n) {
            return false;
        }
        let from = self.path[j];
        let next = self.morse[j] + alternating(j + 1) * sign_diff(q, from);
        if next < 0 {
            return false;
        }
        let (lo, hi) = (from.min(q), from.max(q));
        let side = j % 2;
        let crosses = self.arcs[side]
            .iter()
            .any(|&(c, d)| (lo < c && c < hi && hi < d) || (c < lo && lo < d && d < hi));
        if crosses {
            return false;
        }
        self.arcs[side].push((lo, hi));
        self.used[q] = true;
        self.path.push(q);
        self.morse.push(next);
        true
    }

    fn pop(&mut self) {
        let q = self.path.pop().expect("non-empty path");
        self.morse.pop();
        self.used[q] = false;
        let j = self.path.len() - 1;
        self.arcs[j % 2].pop();
    }

    fn extend(&mut self, out: &mut Vec<Vec<usize>>) {
        if self.path.len() == self.n + 1 {
            out.push(self.path[1..].to_vec());
            return;
        }
        for q in 2..=self.n {
            if self.push(q) {
                self.extend(out);
                self.pop();
            }
        }
    }
}

fn backtrack_engine(n: usize) -> Vec<SturmPermutation> {
    if n == 1 {
        return vec![SturmPermutation::identity(1)];
    }
    // partition by the axis position of label 2
    let mut inverses: Vec<Vec<usize>> = (2..=n)
        .into_par_iter()
        .map(|q| {
            let mut builder = Builder::new(n);
            let mut out = Vec::new();
            if builder.push(q) {
                builder.extend(&mut out);
            }
            out
        })
        .flatten()
        .collect();
    inverses.par_sort_unstable();
    let mut perms: Vec<SturmPermutation> = inverses
        .into_iter()
        .map(|inv| {
            SturmPermutation::from_map(inv)
                .expect("search yields bijections")
                .inverse()
        })
        .collect();
    perms.sort();
    perms
}

/// Pass/fail tally for one invariant over an enumerated family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub n_max: usize,
    /// `(n, number of Sturm permutations)` for every odd `n ≤ n_max`.
    pub counts: Vec<(usize, usize)>,
    pub permutations_checked: usize,
    pub properties: Vec<PropertyResult>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

#[derive(Default)]
struct Tally {
    results: Vec<PropertyResult>,
}

impl Tally {
    fn entry(&mut self, name: &'static str) -> &mut PropertyResult {
        let idx = match self.results.iter().position(|r| r.name == name) {
            Some(idx) => idx,
            None => {
                self.results.push(PropertyResult {
                    name,
                    checked: 0,
                    failures: 0,
                    first_counterexample: None,
                });
                self.results.len() - 1
            }
        };
        &mut self.results[idx]
    }

    fn record(&mut self, name: &'static str, p: &SturmPermutation, failure: Option<String>) {
        let entry = self.entry(name);
        entry.checked += 1;
        if let Some(detail) = failure {
            entry.failures += 1;
            if entry.first_counterexample.is_none() {
                entry.first_counterexample = Some(format!("[{p}] {detail}"));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        for r in other.results {
            let entry = self.entry(r.name);
            entry.checked += r.checked;
            entry.failures += r.failures;
            if entry.first_counterexample.is_none() {
                entry.first_counterexample = r.first_counterexample;
            }
        }
    }
}

fn first<I: IntoIterator<Item = Option<String>>>(iter: I) -> Option<String> {
    iter.into_iter().flatten().next()
}

/// Runs every invariant over all Sturm permutations of odd size up to `n_max`.
pub fn property_harness(n_max: usize) -> Result<HarnessReport> {
    property_harness_with(n_max, &EnumerationConfig::default())
}

pub fn property_harness_with(n_max: usize, config: &EnumerationConfig) -> Result<HarnessReport> {
    if n_max.is_multiple_of(2) {
        return Err(Error::EvenLength {
            position: n_max,
            n: n_max,
        });
    }
    let mut families: Vec<(usize, Vec<SturmPermutation>)> = Vec::new();
    for n in (1..=n_max).step_by(2) {
        families.push((n, enumerate_with(n, config)?));
    }
    let members: BTreeSet<&SturmPermutation> =
        families.iter().flat_map(|(_, f)| f.iter()).collect();
    let all: Vec<&SturmPermutation> = families.iter().flat_map(|(_, f)| f.iter()).collect();

    let tallies: Vec<Tally> = all
        .par_iter()
        .map(|p| check_permutation(p, &members, n_max))
        .collect();
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    Ok(HarnessReport {
        n_max,
        counts: families.iter().map(|(n, f)| (*n, f.len())).collect(),
        permutations_checked: all.len(),
        properties: total.results,
    })
}

fn check_permutation(
    p: &SturmPermutation,
    members: &BTreeSet<&SturmPermutation>,
    n_max: usize,
) -> Tally {
    let mut t = Tally::default();
    let n = p.len();
    let morse = p.morse_indices();
    let mv = morse.as_slice();

    t.record(
        "morse_recursion_steps",
        p,
        first(
            std::iter::once((mv[0] != 0).then(|| "i_1 != 0".to_string())).chain(
                (1..n).map(|j| ((mv[j] - mv[j - 1]).abs() != 1).then(|| format!("step at {j}"))),
            ),
        ),
    );
    t.record(
        "morse_label_parity",
        p,
        (1..=n)
            .find(|&j| (morse.get(j) + j as i64) % 2 == 0)
            .map(|j| format!("label {j}")),
    );
    t.record(
        "morse_ends_at_zero",
        p,
        (morse.get(n) != 0).then(|| format!("i_n = {}", morse.get(n))),
    );

    // Klein group
    let tau = p.inverse();
    let kappa = p.reversal_conjugate();
    t.record(
        "klein_involutions_commute",
        p,
        (tau.inverse() != *p
            || kappa.reversal_conjugate() != *p
            || tau.reversal_conjugate() != kappa.inverse())
        .then(|| "τ, κ not commuting involutions".to_string()),
    );
    let mt = tau.morse_indices();
    let mk = kappa.morse_indices();
    t.record(
        "klein_morse_relabel",
        p,
        first((1..=n).map(|k| {
            (mt.get(k) != morse.get(p.sigma(k)) || mk.get(k) != morse.get(n + 1 - k))
                .then(|| format!("label {k}"))
        })),
    );
    t.record(
        "klein_orbit_closure",
        p,
        p.klein_orbit()
            .ok()
            .and_then(|o| o.distinct().into_iter().find(|q| !members.contains(q)))
            .map(|q| format!("orbit member [{q}] not enumerated")),
    );

    // crossing numbers
    let mut additivity = None;
    'add: for l in 1..=n {
        for a in 1..=n {
            for b in 1..=n {
                let ab = p.crossing_value(a, b, l);
                if ab != -p.crossing_value(b, a, l) {
                    additivity = Some(format!("antisymmetry c({a},{b};{l})"));
                    break 'add;
                }
                for c in 1..=n {
                    if ab + p.crossing_value(b, c, l) != p.crossing_value(a, c, l) {
                        additivity = Some(format!("additivity c({a},{b},{c};{l})"));
                        break 'add;
                    }
                }
            }
        }
    }
    t.record("crossing_additivity", p, additivity);
    t.record(
        "crossing_endpoint_zero",
        p,
        (1..n)
            .find(|&j| p.crossing_value(j, j + 1, j) != 0 || p.crossing_value(j, j + 1, j + 1) != 0)
            .map(|j| format!("arc {j}")),
    );

    let model = AttractorModel::build(p).expect("enumerated permutations are Sturm");
    let z = model.z();

    let mut nsl = None;
    'nsl: for j in 1..=n {
        for k in 1..=n {
            if j != k {
                let via = z_pair_nsl(p, j, k).expect("distinct labels");
                if via != z.get(j, k) {
                    nsl = Some(format!(
                        "pair ({j},{k}): formula {via}, recursion {}",
                        z.get(j, k)
                    ));
                    break 'nsl;
                }
            }
        }
    }
    t.record("nsl_identity", p, nsl);

    let laws = first(
        (1..=n)
            .flat_map(|j| (1..=n).map(move |k| (j, k)))
            .map(|(j, k)| {
                if z.get(j, k) != z.get(k, j) {
                    Some(format!("asymmetric at ({j},{k})"))
                } else if z.get(j, k) < 0 {
                    Some(format!("negative at ({j},{k})"))
                } else if k == j + 1 && z.get(j, k) != morse.get(j).min(morse.get(k)) {
                    Some(format!("adjacency law at ({j},{k})"))
                } else if j != k && (j == 1 || k == n) && z.get(j, k) != 0 {
                    Some(format!("boundary row at ({j},{k})"))
                } else {
                    None
                }
            }),
    );
    t.record("zero_matrix_laws", p, laws);

    t.record(
        "connections_descend",
        p,
        model
            .connections()
            .iter()
            .find(|&&(j, k)| morse.get(j) <= morse.get(k))
            .map(|e| format!("edge {e:?}")),
    );
    t.record(
        "boundary_adjacent_pairs_connect",
        p,
        first((1..n).map(|j| {
            let (hi, lo) = if morse.get(j) > morse.get(j + 1) {
                (j, j + 1)
            } else {
                (j + 1, j)
            };
            let (a, b) = (p.sigma(j), p.sigma(j + 1));
            let (ahi, alo) = if morse.get(a) > morse.get(b) {
                (a, b)
            } else {
                (b, a)
            };
            if !model.connections().contains(&(hi, lo)) {
                Some(format!("x=0 neighbours {hi}->{lo}"))
            } else if !model.connections().contains(&(ahi, alo)) {
                Some(format!("x=1 neighbours {ahi}->{alo}"))
            } else {
                None
            }
        })),
    );

    let mut dichotomy = None;
    let mut theorem = None;
    let mut identification = None;
    let mut extended = None;
    let mut one_sided = None;
    for o in 1..=n {
        let quartet = model.boundary_neighbors(o).expect("label in range");
        let no = morse.get(o);
        for b in Boundary::BOTH {
            for s in Sign::BOTH {
                if let Some(w) = quartet.get(b, s) {
                    if (morse.get(w) - no).abs() != 1 && dichotomy.is_none() {
                        dichotomy = Some(format!("O={o}, neighbour {w}"));
                    }
                }
            }
        }
        if no == 0 {
            continue;
        }
        let verdict = model.verify_minimax_theorem(o).expect("unstable");
        if !verdict.passed() && theorem.is_none() {
            theorem = Some(format!("O={o}: {:?}", verdict.cases));
        }
        if !verdict.identifications_hold() && identification.is_none() {
            identification = Some(format!("O={o}"));
        }
        if !verdict.extended_passed() && extended.is_none() {
            extended = Some(format!("O={o}"));
        }
        // one sign class lies on one side of O at x = 1 as well
        for k in 0..no {
            for s in Sign::BOTH {
                let members = model.target_set(o, k, s).expect("valid level");
                let want = match s.times_parity(k) {
                    Sign::Plus => std::cmp::Ordering::Greater,
                    Sign::Minus => std::cmp::Ordering::Less,
                };
                if let Some(w) = members
                    .iter()
                    .find(|&&w| p.position(w).cmp(&p.position(o)) != want)
                {
                    if one_sided.is_none() {
                        one_sided = Some(format!("O={o}, k={k}{s}, w={w}"));
                    }
                }
            }
        }
    }
    t.record("neighbor_morse_dichotomy", p, dichotomy);
    t.record("minimax_theorem", p, theorem);
    t.record("neighbor_identification", p, identification);
    t.record("minimax_extended", p, extended);
    t.record("target_sets_one_sided", p, one_sided);

    let suspension = verify_suspension(p).expect("Sturm input");
    t.record(
        "suspension_lemmas",
        p,
        suspension
            .checks
            .iter()
            .find(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default())),
    );
    if n + 2 <= n_max {
        let s = suspend(p).expect("Sturm input").suspended;
        t.record(
            "suspension_closure",
            p,
            (!members.contains(&s)).then(|| format!("suspension [{s}] not enumerated")),
        );
    }

    let mut window = None;
    'win: for first in 1..n {
        for len in 2..=n + 1 - first {
            let win = MeanderWindow::from_permutation(p, first, len).expect("window fits");
            match window_z(&win) {
                Ok(block) if block == z.block(first, len) => {}
                Ok(_) => {
                    window = Some(format!("labels {first}..{}", first + len - 1));
                    break 'win;
                }
                Err(e) => {
                    window = Some(format!("labels {first}..{}: {e}", first + len - 1));
                    break 'win;
                }
            }
        }
    }
    t.record("window_faithfulness", p, window);

    t
}
