//! Reference implementations written directly from the definitions, sharing
//! no code with the library. Everything works on plain 1-based `Vec<usize>`
//! maps; index 0 of every returned vector is unused.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

pub const SEVEN: [usize; 7] = [1, 4, 5, 6, 3, 2, 7];
pub const COMPLETION: [usize; 15] = [1, 14, 13, 6, 5, 4, 7, 12, 11, 8, 9, 10, 3, 2, 15];

pub const PAPER_WINDOW: [[i64; 12]; 12] = [
    [2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 1, 1, 1, 2, 1, 1, 1],
    [1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
];

fn sgn(a: usize, b: usize) -> i64 {
    (a as i64 - b as i64).signum()
}

fn minus_one_pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `pos[j]`: axis position of label `j`.
pub fn positions(map: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; map.len() + 1];
    for (k, &j) in map.iter().enumerate() {
        pos[j] = k + 1;
    }
    pos
}

pub fn morse(map: &[usize]) -> Vec<i64> {
    let n = map.len();
    let pos = positions(map);
    let mut i = vec![0i64; n + 1];
    for j in 1..n {
        i[j + 1] = i[j] + minus_one_pow(j + 1) * sgn(pos[j + 1], pos[j]);
    }
    i
}

/// Two semicircles centred on the axis on the same side meet iff the
/// distance of the centres lies strictly between the difference and the sum
/// of the radii.
pub fn is_meander_geometric(map: &[usize]) -> bool {
    let n = map.len();
    let pos = positions(map);
    let circle = |m: usize| {
        let (a, b) = (pos[m] as f64, pos[m + 1] as f64);
        ((a + b) / 2.0, (a - b).abs() / 2.0)
    };
    for m1 in 1..n {
        for m2 in (m1 + 1)..n {
            if m1 % 2 != m2 % 2 {
                continue;
            }
            let ((c1, r1), (c2, r2)) = (circle(m1), circle(m2));
            let d = (c1 - c2).abs();
            if (r1 - r2).abs() < d && d < r1 + r2 {
                return false;
            }
        }
    }
    true
}

pub fn is_sturm(map: &[usize]) -> bool {
    let n = map.len();
    n % 2 == 1
        && map[0] == 1
        && map[n - 1] == n
        && morse(map)[1..].iter().all(|&m| m >= 0)
        && is_meander_geometric(map)
}

/// Clockwise half-turns of the curve from label `j` to label `k` around the
/// crossing of label `l`, integrated numerically along the semicircles.
/// Arcs ending at `l` are skipped.
pub fn winding(map: &[usize], j: usize, k: usize, l: usize) -> i64 {
    let (lo, hi, orient) = if j <= k { (j, k, 1.0) } else { (k, j, -1.0) };
    let pos = positions(map);
    let px = pos[l] as f64;
    let mut angle = 0.0f64;
    for m in lo..hi {
        if m == l || m + 1 == l {
            continue;
        }
        let (a, b) = (pos[m] as f64, pos[m + 1] as f64);
        let (c, r) = ((a + b) / 2.0, (a - b).abs() / 2.0);
        let above = m % 2 == 1;
        let steps = 64;
        let mut prev: Option<f64> = None;
        for s in 0..=steps {
            // parameter from the start point at a to the end point at b
            let t = s as f64 / steps as f64 * std::f64::consts::PI;
            let start = if a < b { std::f64::consts::PI } else { 0.0 };
            let theta = if a < b { start - t } else { start + t };
            let y = r * theta.sin() * if above { 1.0 } else { -1.0 };
            let x = c + r * theta.cos();
            let phi = y.atan2(x - px);
            if let Some(p) = prev {
                let mut d = phi - p;
                while d > std::f64::consts::PI {
                    d -= 2.0 * std::f64::consts::PI;
                }
                while d < -std::f64::consts::PI {
                    d += 2.0 * std::f64::consts::PI;
                }
                angle += d;
            }
            prev = Some(phi);
        }
    }
    (-orient * angle / std::f64::consts::PI).round() as i64
}

/// Zero numbers by the descending recursion, transcribed literally; the
/// diagonal holds the Morse indices.
pub fn zero_numbers(map: &[usize]) -> Vec<Vec<i64>> {
    let n = map.len();
    let pos = positions(map);
    let mut z = vec![vec![0i64; n + 1]; n + 1];
    for j in 2..n {
        for k in (j + 1..n).rev() {
            let jump = sgn(pos[k + 1], pos[j]) - sgn(pos[k], pos[j]);
            z[j][k] = z[j][k + 1] + minus_one_pow(k) * jump / 2;
        }
    }
    let i = morse(map);
    for j in 1..=n {
        for k in 1..j {
            z[j][k] = z[k][j];
        }
        z[j][j] = i[j];
    }
    z
}

pub struct Oracle {
    pub n: usize,
    pub pos: Vec<usize>,
    pub i: Vec<i64>,
    pub z: Vec<Vec<i64>>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Oracle {
    pub fn new(map: &[usize]) -> Self {
        let n = map.len();
        let i = morse(map);
        let z = zero_numbers(map);
        let mut edges = BTreeSet::new();
        for a in 1..=n {
            for b in 1..=n {
                if a == b || i[a] <= i[b] {
                    continue;
                }
                let (lo, hi) = (a.min(b), a.max(b));
                let blocked = (lo + 1..hi).any(|w| z[a][w] == z[a][b] && z[w][b] == z[a][b]);
                if !blocked {
                    edges.insert((a, b));
                }
            }
        }
        Oracle {
            n,
            pos: positions(map),
            i,
            z,
            edges,
        }
    }

    /// `plus` selects labels above `o`.
    pub fn target(&self, o: usize, k: i64, plus: bool) -> Vec<usize> {
        (1..=self.n)
            .filter(|&w| {
                w != o && (w > o) == plus && self.z[o][w] == k && self.edges.contains(&(o, w))
            })
            .collect()
    }

    fn distance(&self, o: usize, w: usize, x1: bool) -> usize {
        if x1 {
            self.pos[w].abs_diff(self.pos[o])
        } else {
            w.abs_diff(o)
        }
    }

    pub fn closest(&self, o: usize, set: &[usize], x1: bool) -> usize {
        let best = set.iter().map(|&w| self.distance(o, w, x1)).min().unwrap();
        *set.iter()
            .find(|&&w| self.distance(o, w, x1) == best)
            .unwrap()
    }

    pub fn most_distant(&self, o: usize, set: &[usize], x1: bool) -> usize {
        let best = set.iter().map(|&w| self.distance(o, w, x1)).max().unwrap();
        *set.iter()
            .find(|&&w| self.distance(o, w, x1) == best)
            .unwrap()
    }

    /// `(x1, plus side, neighbour)` for every boundary neighbour of `o`.
    pub fn neighbours(&self, o: usize) -> Vec<(bool, bool, usize)> {
        let mut out = Vec::new();
        if o > 1 {
            out.push((false, false, o - 1));
        }
        if o < self.n {
            out.push((false, true, o + 1));
        }
        let p = self.pos[o];
        let at = |q: usize| (1..=self.n).find(|&w| self.pos[w] == q).unwrap();
        if p > 1 {
            out.push((true, false, at(p - 1)));
        }
        if p < self.n {
            out.push((true, true, at(p + 1)));
        }
        out
    }

    /// Checks every neighbour of `o` with Morse index one below: it must be
    /// the closest member of its target set at its own boundary, and that
    /// member must be the most distant one at the other boundary.
    /// Returns the number of applicable cases and the first failure.
    pub fn minimax_cases(&self, o: usize) -> (usize, Option<String>) {
        let n = self.i[o];
        let mut count = 0;
        for (x1, plus, w) in self.neighbours(o) {
            if self.i[w] != n - 1 {
                continue;
            }
            count += 1;
            let sign_plus = if x1 && (n - 1) % 2 == 1 { !plus } else { plus };
            let set = self.target(o, n - 1, sign_plus);
            if set.is_empty() {
                return (
                    count,
                    Some(format!("O={o}: empty target set for neighbour {w}")),
                );
            }
            let near = self.closest(o, &set, x1);
            let far = self.most_distant(o, &set, !x1);
            if near != w || near != far {
                return (
                    count,
                    Some(format!(
                        "O={o} neighbour {w}: closest {near}, opposite most distant {far}"
                    )),
                );
            }
        }
        (count, None)
    }
}

/// All endpoint-fixing permutations of size `n` that pass the oracle Sturm test.
pub fn brute_force_sturm(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n - 1 {
            prefix.push(n);
            if is_sturm(prefix) {
                out.push(prefix.clone());
            }
            prefix.pop();
            return;
        }
        for v in 2..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    rec(n, &mut vec![1], &mut vec![false; n + 1], &mut out);
    out
}

/// Suspension written from the picture: half-turn rotation plus two new extremes.
pub fn suspension(map: &[usize]) -> Vec<usize> {
    let n = map.len();
    let mut s = vec![1];
    s.extend(map.iter().rev().map(|&j| j + 1));
    s.push(n + 2);
    s
}
