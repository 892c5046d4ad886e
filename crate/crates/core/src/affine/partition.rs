use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, stored without trailing zero parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Young diagram inclusion.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let t = self.transpose();
        self.0.iter().enumerate().map(|(r, &p)| (0..p).map(|c| p - c + t.part(c) - r - 1).collect()).collect()
    }

    /// No part repeated `e` or more times.
    pub fn is_regular(&self, e: usize) -> bool {
        self.0.chunk_by(|a, b| a == b).all(|run| run.len() < e)
    }

    /// Consecutive parts differ by less than `e`.
    pub fn is_restricted(&self, e: usize) -> bool {
        self.0.iter().zip(self.0.iter().skip(1).chain([&0])).all(|(a, b)| a - b < e)
    }

    /// Adds a box at the end of row `r` (0-based); the caller checks addability.
    pub(crate) fn add_box(&mut self, r: usize) {
        if r == self.0.len() {
            self.0.push(1);
        } else {
            self.0[r] += 1;
        }
    }

    pub(crate) fn remove_box(&mut self, r: usize) {
        self.0[r] -= 1;
        if self.0[r] == 0 {
            self.0.pop();
        }
    }

    /// Parses `5.3.3.2`, `5,3,3,2` or `∅`/empty.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(['.', ','])
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join("."))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// A multipartition `(λ¹,…,λ^l)`.
pub type Multipartition = Vec<Partition>;

pub fn multipartition_rank(m: &[Partition]) -> usize {
    m.iter().map(Partition::rank).sum()
}

pub fn multipartition_display(m: &[Partition]) -> String {
    let s: Vec<String> = m.iter().map(|p| p.to_string()).collect();
    format!("({})", s.join(", "))
}

/// Parses `1.1,∅` or `1.1|` style lists separated by `,` `|` or `;` into `l` components.
pub fn parse_multipartition(s: &str) -> Result<Multipartition> {
    s.split(['|', ';', '/']).map(Partition::parse).collect()
}

/// All `l`-multipartitions of total rank `n`.
pub fn multipartitions_of(l: usize, n: usize) -> Vec<Multipartition> {
    if l == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for first in partitions_of(k) {
            for mut rest in multipartitions_of(l - 1, n - k) {
                rest.insert(0, first.clone());
                out.push(rest);
            }
        }
    }
    out
}

pub fn multipartitions_up_to(l: usize, n: usize) -> Vec<Multipartition> {
    (0..=n).flat_map(|k| multipartitions_of(l, k)).collect()
}
