//! Canonical arc diagrams, the meander test, crossing numbers and quadrant parity.
//!
//! In canonical form the curve crosses the axis vertically at every label and
//! joins consecutive labels `j, j + 1` by a semicircle. The first crossing is
//! upward, so arc `j` lies above the axis iff `j` is odd.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{alternating, sign_diff, SturmPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

impl Side {
    /// Side of the arc joining labels `step` and `step + 1`.
    pub fn of_step(step: usize) -> Side {
        if step % 2 == 1 {
            Side::Above
        } else {
            Side::Below
        }
    }
}

/// Semicircle joining the crossings labelled `curve_step` and `curve_step + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from_pos: usize,
    pub to_pos: usize,
    pub side: Side,
    pub curve_step: usize,
}

impl Arc {
    /// Endpoints as an ordered interval `(left, right)`.
    pub fn interval(&self) -> (usize, usize) {
        if self.from_pos < self.to_pos {
            (self.from_pos, self.to_pos)
        } else {
            (self.to_pos, self.from_pos)
        }
    }

    /// True when the curve runs left to right along this arc.
    pub fn is_rightward(&self) -> bool {
        self.to_pos > self.from_pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeanderDiagram {
    pub n: usize,
    pub arcs: Vec<Arc>,
}

impl MeanderDiagram {
    pub fn arcs_on(&self, side: Side) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(move |a| a.side == side)
    }
}

/// Signed count of clockwise crossings of the curve segment from `j` to `k`
/// through the vertical line at label `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingCount {
    pub value: i64,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Parity class of the arc leaving a crossing, selecting the branch of the
/// zero number formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quadrant {
    Odd,
    Even,
}

pub fn build_diagram(p: &SturmPermutation) -> MeanderDiagram {
    p.diagram()
}

impl SturmPermutation {
    /// Canonical arc diagram induced by the permutation.
    pub fn diagram(&self) -> MeanderDiagram {
        let n = self.len();
        let arcs = (1..n)
            .map(|j| Arc {
                from_pos: self.position(j),
                to_pos: self.position(j + 1),
                side: Side::of_step(j),
                curve_step: j,
            })
            .collect();
        MeanderDiagram { n, arcs }
    }

    /// The arcs on each side of the axis are pairwise non-crossing.
    ///
    /// Every axis position is an endpoint of at most one arc per side, so one
    /// left-to-right sweep with a stack of open arcs decides each side in
    /// linear time.
    pub fn is_meander(&self) -> bool {
        let n = self.len();
        let mut partner = vec![0usize; n + 1];
        let mut stack = Vec::with_capacity(n);
        for side_step in [1usize, 2] {
            partner.iter_mut().for_each(|x| *x = 0);
            for j in (side_step..n).step_by(2) {
                let (a, b) = (self.position(j), self.position(j + 1));
                partner[a] = b;
                partner[b] = a;
            }
            stack.clear();
            for pos in 1..=n {
                let other = partner[pos];
                if other == 0 {
                    continue;
                }
                if other > pos {
                    stack.push(pos);
                } else if stack.pop() != Some(other) {
                    return false;
                }
            }
        }
        true
    }

    /// First failed clause of the Sturm characterization, if any.
    pub fn sturm_defect(&self) -> Option<&'static str> {
        if !self.is_dissipative() {
            Some("not dissipative")
        } else if !self.is_morse() {
            Some("not Morse")
        } else if !self.is_meander() {
            Some("not a meander")
        } else {
            None
        }
    }

    /// Dissipative, Morse and meander.
    pub fn is_sturm(&self) -> bool {
        self.sturm_defect().is_none()
    }

    /// Contribution of arc `m` (labels `m → m + 1`) to crossings around `l`.
    /// Arcs ending at `l` contribute nothing.
    #[inline]
    pub(crate) fn crossing_step(&self, m: usize, l: usize) -> i64 {
        if l == m || l == m + 1 {
            return 0;
        }
        let at = self.position(l);
        let jump = sign_diff(self.position(m + 1), at) - sign_diff(self.position(m), at);
        alternating(m + 1) * jump / 2
    }

    /// Unchecked crossing number for labels already known to be in range.
    pub(crate) fn crossing_value(&self, j: usize, k: usize, l: usize) -> i64 {
        let (lo, hi, orient) = if j <= k { (j, k, 1) } else { (k, j, -1) };
        orient * (lo..hi).map(|m| self.crossing_step(m, l)).sum::<i64>()
    }

    pub fn crossing_number(&self, j: usize, k: usize, l: usize) -> Result<CrossingCount> {
        for label in [j, k, l] {
            self.check_label(label)?;
        }
        Ok(CrossingCount {
            value: self.crossing_value(j, k, l),
            j,
            k,
            l,
        })
    }

    /// Odd iff the Morse index rises along the arc leaving `j`.
    pub fn quadrant_parity(&self, j: usize) -> Result<Quadrant> {
        self.check_label(j)?;
        if j == self.len() {
            return Err(Error::NoOutgoingArc { label: j });
        }
        let step = alternating(j + 1) * sign_diff(self.position(j + 1), self.position(j));
        Ok(if step > 0 {
            Quadrant::Odd
        } else {
            Quadrant::Even
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> SturmPermutation {
        text.parse().unwrap()
    }

    fn pairs(d: &MeanderDiagram, side: Side) -> Vec<(usize, usize)> {
        d.arcs_on(side).map(|a| (a.from_pos, a.to_pos)).collect()
    }

    #[test]
    fn diagram() {
        let d = p("1 4 5 6 3 2 7").diagram();
        assert_eq!(d.arcs.len(), 6);
        assert_eq!(pairs(&d, Side::Above), vec![(1, 6), (5, 2), (3, 4)]);
        assert_eq!(pairs(&d, Side::Below), vec![(6, 5), (2, 3), (4, 7)]);
    }

    #[test]
    fn identity_diagrams() {
        let d = SturmPermutation::identity(3).diagram();
        assert_eq!(pairs(&d, Side::Above), vec![(1, 2)]);
        assert_eq!(pairs(&d, Side::Below), vec![(2, 3)]);
        assert_eq!(SturmPermutation::identity(5).diagram().arcs.len(), 4);
        assert!(SturmPermutation::identity(1).diagram().arcs.is_empty());
    }

    #[test]
    fn meander_examples() {
        assert!(p("1 4 5 6 3 2 7").is_meander());
        assert!(!p("1 3 2 4 5").is_meander());
        assert!(!p("1 2 4 3 5").is_meander());
        assert!(SturmPermutation::identity(9).is_meander());
    }

    #[test]
    fn sturm_examples() {
        assert!(p("1 4 5 6 3 2 7").is_sturm());
        assert!(p("1 4 3 2 5").is_sturm());
        assert!(!p("1 3 4 2 5").is_sturm());
        assert_eq!(p("1 3 4 2 5").sturm_defect(), Some("not a meander"));
        assert_eq!(p("2 1 3").sturm_defect(), Some("not dissipative"));
    }

    #[test]
    fn crossing_examples() {
        let s = p("1 4 5 6 3 2 7");
        assert_eq!(s.crossing_number(1, 7, 4).unwrap().value, 1);
        assert_eq!(s.crossing_number(7, 1, 4).unwrap().value, -1);
        assert_eq!(s.crossing_number(3, 5, 3).unwrap().value, 0);
        for j in 1..=7 {
            for l in 1..=7 {
                assert_eq!(s.crossing_number(j, j, l).unwrap().value, 0);
            }
        }
        assert!(matches!(
            s.crossing_number(0, 2, 3),
            Err(Error::LabelOutOfRange { label: 0, n: 7 })
        ));
        assert!(s.crossing_number(1, 8, 3).is_err());
    }

    #[test]
    fn quadrant_examples() {
        let s = p("1 4 5 6 3 2 7");
        assert_eq!(s.quadrant_parity(2).unwrap(), Quadrant::Odd);
        assert_eq!(s.quadrant_parity(3).unwrap(), Quadrant::Even);
        assert_eq!(
            SturmPermutation::identity(3).quadrant_parity(1).unwrap(),
            Quadrant::Odd
        );
        assert_eq!(s.quadrant_parity(7), Err(Error::NoOutgoingArc { label: 7 }));
    }
}
