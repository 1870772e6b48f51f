//! Heteroclinic connections, boundary neighbours and minimax equilibria.
//!
//! Equilibria are identified with their meander labels `j` (their order at
//! `x = 0`); their order at `x = 1` is the axis position `sigma⁻¹(j)`.
//! A connection `j ⤳ k` exists iff the Morse index drops and no label `w`
//! strictly between `j` and `k` has `z(w - v_j) = z(v_k - w) = z(v_k - v_j)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{MorseVector, SturmPermutation};
use crate::zeronum::{z_matrix, Sign, SignedZero, ZeroMatrix};

/// One of the two boundary points `x = 0` and `x = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Boundary {
    #[serde(rename = "x0")]
    X0,
    #[serde(rename = "x1")]
    X1,
}

impl Boundary {
    pub const BOTH: [Boundary; 2] = [Boundary::X0, Boundary::X1];

    pub fn opposite(self) -> Boundary {
        match self {
            Boundary::X0 => Boundary::X1,
            Boundary::X1 => Boundary::X0,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Boundary::X0 => 0,
            Boundary::X1 => 1,
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}", self.index())
    }
}

/// Morse indices, zero numbers and the connection relation of one Sturm permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttractorModel {
    perm: SturmPermutation,
    morse: MorseVector,
    z: ZeroMatrix,
    connections: BTreeSet<(usize, usize)>,
}

/// Outcome of the blocking test between two labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZAdjacency {
    pub adjacent: bool,
    /// Smallest blocking label, when not adjacent.
    pub blocker: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub label: usize,
    pub morse: i64,
}

/// Connection digraph; nodes in label order, edges sorted by `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<(usize, usize)>,
}

impl ConnectionGraph {
    pub fn successors(&self, label: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.edges.partition_point(|&(s, _)| s < label);
        self.edges[start..]
            .iter()
            .take_while(move |&&(s, _)| s == label)
            .map(|&(_, t)| t)
    }

    /// Labels reachable from `label` along one or more edges.
    pub fn reachable_from(&self, label: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = self.successors(label).collect();
        while let Some(next) = stack.pop() {
            if seen.insert(next) {
                stack.extend(self.successors(next));
            }
        }
        seen
    }

    /// Transitive reachability; direct edges are a subset of this relation.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.reachable_from(from).contains(&to)
    }

    /// Nodes without incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        let targets: BTreeSet<usize> = self.edges.iter().map(|&(_, t)| t).collect();
        self.nodes
            .iter()
            .map(|n| n.label)
            .filter(|l| !targets.contains(l))
            .collect()
    }
}

/// Predecessors (`-`) and successors (`+`) of an equilibrium in the two boundary orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct NeighborQuartet {
    pub w0_minus: Option<usize>,
    pub w0_plus: Option<usize>,
    pub w1_minus: Option<usize>,
    pub w1_plus: Option<usize>,
}

impl NeighborQuartet {
    pub fn get(&self, boundary: Boundary, side: Sign) -> Option<usize> {
        match (boundary, side) {
            (Boundary::X0, Sign::Minus) => self.w0_minus,
            (Boundary::X0, Sign::Plus) => self.w0_plus,
            (Boundary::X1, Sign::Minus) => self.w1_minus,
            (Boundary::X1, Sign::Plus) => self.w1_plus,
        }
    }
}

/// Extremes of a target set: closest to and most distant from the base
/// equilibrium in each boundary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimaxSet {
    pub closest_x0: usize,
    pub closest_x1: usize,
    pub distant_x0: usize,
    pub distant_x1: usize,
}

impl MinimaxSet {
    pub fn closest(&self, at: Boundary) -> usize {
        match at {
            Boundary::X0 => self.closest_x0,
            Boundary::X1 => self.closest_x1,
        }
    }

    pub fn most_distant(&self, at: Boundary) -> usize {
        match at {
            Boundary::X0 => self.distant_x0,
            Boundary::X1 => self.distant_x1,
        }
    }
}

/// Prediction of which closest equilibrium a boundary neighbour coincides with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NeighborIdentification {
    pub boundary: Boundary,
    /// `-` for the predecessor, `+` for the successor.
    pub side: Sign,
    pub label: usize,
    pub morse: i64,
    /// The neighbour is more stable than the base (`morse = n - 1`).
    pub applicable: bool,
    /// Sign class of the predicted closest equilibrium at the same boundary.
    pub predicted_sign: Option<Sign>,
    pub closest: Option<usize>,
    pub holds: Option<bool>,
}

/// One case of the minimax equality `closest at ι = most distant at 1 - ι`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimaxCase {
    pub k: i64,
    pub sign: Sign,
    pub boundary: Boundary,
    pub closest: Option<usize>,
    pub most_distant_opposite: Option<usize>,
    pub pass: bool,
}

/// Theorem case triggered by a neighbour with Morse index `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremCase {
    pub neighbor: usize,
    /// The neighbour equals the closest equilibrium it is predicted to be.
    pub identified: bool,
    #[serde(flatten)]
    pub check: MinimaxCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimaxVerdict {
    pub base: usize,
    pub n: i64,
    pub cases: Vec<TheoremCase>,
    /// All levels `0 ≤ k < n`, both signs and boundaries with a non-empty target set.
    pub extended: Vec<MinimaxCase>,
}

impl MinimaxVerdict {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.check.pass)
    }

    pub fn identifications_hold(&self) -> bool {
        self.cases.iter().all(|c| c.identified)
    }

    pub fn extended_passed(&self) -> bool {
        self.extended.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetSetRecord {
    pub k: i64,
    pub sign: Sign,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimaxRecord {
    pub sign: Sign,
    #[serde(flatten)]
    pub extremes: MinimaxSet,
}

/// Everything known about one unstable equilibrium.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimaxReport {
    #[serde(rename = "O")]
    pub base: usize,
    pub n: i64,
    pub neighbors: NeighborQuartet,
    pub target_sets: Vec<TargetSetRecord>,
    /// Extremes of the two target sets at level `n - 1`.
    pub minimax: Vec<MinimaxRecord>,
    pub identifications: Vec<NeighborIdentification>,
    pub verdicts: MinimaxVerdict,
}

pub fn build_model(p: &SturmPermutation) -> Result<AttractorModel> {
    AttractorModel::build(p)
}

impl AttractorModel {
    pub fn build(p: &SturmPermutation) -> Result<Self> {
        let z = z_matrix(p)?;
        let morse = p.morse_indices();
        let n = p.len();
        let mut model = AttractorModel {
            perm: p.clone(),
            morse,
            z,
            connections: BTreeSet::new(),
        };
        let mut connections = BTreeSet::new();
        for j in 1..=n {
            for k in 1..=n {
                if j != k && model.criterion(j, k) {
                    connections.insert((j, k));
                }
            }
        }
        model.connections = connections;
        Ok(model)
    }

    pub fn permutation(&self) -> &SturmPermutation {
        &self.perm
    }

    pub fn morse(&self) -> &MorseVector {
        &self.morse
    }

    pub fn z(&self) -> &ZeroMatrix {
        &self.z
    }

    pub fn connections(&self) -> &BTreeSet<(usize, usize)> {
        &self.connections
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    fn check_pair(&self, j: usize, k: usize) -> Result<()> {
        self.perm.check_label(j)?;
        self.perm.check_label(k)?;
        if j == k {
            return Err(Error::SameLabel { label: j });
        }
        Ok(())
    }

    fn blocker(&self, j: usize, k: usize) -> Option<usize> {
        let target = self.z.get(j, k);
        (j.min(k) + 1..j.max(k)).find(|&w| self.z.get(j, w) == target && self.z.get(w, k) == target)
    }

    fn criterion(&self, j: usize, k: usize) -> bool {
        self.morse.get(j) > self.morse.get(k) && self.blocker(j, k).is_none()
    }

    pub fn is_z_adjacent(&self, j: usize, k: usize) -> Result<ZAdjacency> {
        self.check_pair(j, k)?;
        let blocker = self.blocker(j, k);
        Ok(ZAdjacency {
            adjacent: blocker.is_none(),
            blocker,
        })
    }

    pub fn connects(&self, j: usize, k: usize) -> Result<bool> {
        self.check_pair(j, k)?;
        Ok(self.criterion(j, k))
    }

    pub fn connection_graph(&self) -> ConnectionGraph {
        ConnectionGraph {
            nodes: (1..=self.len())
                .map(|label| GraphNode {
                    label,
                    morse: self.morse.get(label),
                })
                .collect(),
            edges: self.connections.iter().copied().collect(),
        }
    }

    pub fn signed_z(&self, base: usize, w: usize) -> Result<SignedZero> {
        self.z.signed(base, w)
    }

    pub fn boundary_neighbors(&self, o: usize) -> Result<NeighborQuartet> {
        self.perm.check_label(o)?;
        let n = self.len();
        let pos = self.perm.position(o);
        Ok(NeighborQuartet {
            w0_minus: (o > 1).then(|| o - 1),
            w0_plus: (o < n).then(|| o + 1),
            w1_minus: (pos > 1).then(|| self.perm.sigma(pos - 1)),
            w1_plus: (pos < n).then(|| self.perm.sigma(pos + 1)),
        })
    }

    fn unstable_index(&self, o: usize) -> Result<i64> {
        self.perm.check_label(o)?;
        let n = self.morse.get(o);
        if n == 0 {
            return Err(Error::StableEquilibrium { label: o });
        }
        Ok(n)
    }

    /// Equilibria `w` with `z(w - O) = k±` that `O` connects to, ascending.
    pub fn target_set(&self, o: usize, k: i64, sign: Sign) -> Result<Vec<usize>> {
        let n = self.unstable_index(o)?;
        if k < 0 || k >= n {
            return Err(Error::LevelOutOfRange { k, morse: n });
        }
        let members = match sign {
            Sign::Plus => (o + 1..=self.len()).collect::<Vec<_>>(),
            Sign::Minus => (1..o).collect(),
        };
        Ok(members
            .into_iter()
            .filter(|&w| self.z.get(o, w) == k && self.connections.contains(&(o, w)))
            .collect())
    }

    fn distance(&self, o: usize, w: usize, at: Boundary) -> usize {
        match at {
            Boundary::X0 => o.abs_diff(w),
            Boundary::X1 => self.perm.position(o).abs_diff(self.perm.position(w)),
        }
    }

    fn extremes(&self, o: usize, members: &[usize]) -> Option<MinimaxSet> {
        // ties go to the smaller label; the boundary values of one sign class
        // lie on one side of O, so ties do not arise for Sturm permutations
        let closest = |at| {
            members
                .iter()
                .copied()
                .min_by_key(|&w| (self.distance(o, w, at), w))
        };
        let distant = |at| {
            members
                .iter()
                .copied()
                .max_by_key(|&w| (self.distance(o, w, at), std::cmp::Reverse(w)))
        };
        Some(MinimaxSet {
            closest_x0: closest(Boundary::X0)?,
            closest_x1: closest(Boundary::X1)?,
            distant_x0: distant(Boundary::X0)?,
            distant_x1: distant(Boundary::X1)?,
        })
    }

    pub fn minimax(&self, o: usize, k: i64, sign: Sign) -> Result<MinimaxSet> {
        let members = self.target_set(o, k, sign)?;
        self.extremes(o, &members).ok_or(Error::EmptyTargetSet)
    }

    /// Sign class of the closest equilibrium a neighbour at `boundary` on
    /// `side` should coincide with, for base Morse index `n`.
    fn predicted_sign(boundary: Boundary, side: Sign, n: i64) -> Sign {
        match boundary {
            Boundary::X0 => side,
            // z = n - 1 sign changes: the x = 1 side differs from the
            // x = 0 side exactly when n is even
            Boundary::X1 => side.times_parity(n - 1),
        }
    }

    pub fn identify_neighbors(&self, o: usize) -> Result<Vec<NeighborIdentification>> {
        let n = self.unstable_index(o)?;
        let quartet = self.boundary_neighbors(o)?;
        let mut out = Vec::with_capacity(4);
        for boundary in Boundary::BOTH {
            for side in Sign::BOTH {
                let Some(label) = quartet.get(boundary, side) else {
                    continue;
                };
                let morse = self.morse.get(label);
                let applicable = morse == n - 1;
                let mut ident = NeighborIdentification {
                    boundary,
                    side,
                    label,
                    morse,
                    applicable,
                    predicted_sign: None,
                    closest: None,
                    holds: None,
                };
                if applicable {
                    let sign = Self::predicted_sign(boundary, side, n);
                    let closest = self
                        .minimax(o, n - 1, sign)
                        .ok()
                        .map(|m| m.closest(boundary));
                    ident.predicted_sign = Some(sign);
                    ident.closest = closest;
                    ident.holds = Some(closest == Some(label));
                }
                out.push(ident);
            }
        }
        Ok(out)
    }

    fn minimax_case(&self, o: usize, k: i64, sign: Sign, boundary: Boundary) -> MinimaxCase {
        let extremes = self
            .target_set(o, k, sign)
            .ok()
            .and_then(|members| self.extremes(o, &members));
        let closest = extremes.map(|m| m.closest(boundary));
        let most_distant_opposite = extremes.map(|m| m.most_distant(boundary.opposite()));
        MinimaxCase {
            k,
            sign,
            boundary,
            closest,
            most_distant_opposite,
            pass: closest.is_some() && closest == most_distant_opposite,
        }
    }

    /// Checks `closest at ι = most distant at 1 - ι` in `E^{n-1}_±(O)` for every
    /// boundary neighbour with Morse index `n - 1`, plus the same equality at
    /// every level below `n` as a separate extended check.
    pub fn verify_minimax_theorem(&self, o: usize) -> Result<MinimaxVerdict> {
        let n = self.unstable_index(o)?;
        let cases = self
            .identify_neighbors(o)?
            .into_iter()
            .filter_map(|ident| {
                let sign = ident.predicted_sign?;
                Some(TheoremCase {
                    neighbor: ident.label,
                    identified: ident.holds == Some(true),
                    check: self.minimax_case(o, n - 1, sign, ident.boundary),
                })
            })
            .collect();
        let mut extended = Vec::new();
        for k in 0..n {
            for sign in Sign::BOTH {
                if self.target_set(o, k, sign)?.is_empty() {
                    continue;
                }
                for boundary in Boundary::BOTH {
                    extended.push(self.minimax_case(o, k, sign, boundary));
                }
            }
        }
        Ok(MinimaxVerdict {
            base: o,
            n,
            cases,
            extended,
        })
    }

    pub fn minimax_report(&self, o: usize) -> Result<MinimaxReport> {
        let n = self.unstable_index(o)?;
        let mut target_sets = Vec::new();
        for k in 0..n {
            for sign in Sign::BOTH {
                target_sets.push(TargetSetRecord {
                    k,
                    sign,
                    members: self.target_set(o, k, sign)?,
                });
            }
        }
        let minimax = Sign::BOTH
            .into_iter()
            .filter_map(|sign| {
                self.minimax(o, n - 1, sign)
                    .ok()
                    .map(|extremes| MinimaxRecord { sign, extremes })
            })
            .collect();
        Ok(MinimaxReport {
            base: o,
            n,
            neighbors: self.boundary_neighbors(o)?,
            target_sets,
            minimax,
            identifications: self.identify_neighbors(o)?,
            verdicts: self.verify_minimax_theorem(o)?,
        })
    }

    /// Reports for all unstable equilibria in label order.
    pub fn minimax_reports(&self) -> Vec<MinimaxReport> {
        (1..=self.len())
            .filter(|&o| self.morse.get(o) > 0)
            .filter_map(|o| self.minimax_report(o).ok())
            .collect()
    }
}
