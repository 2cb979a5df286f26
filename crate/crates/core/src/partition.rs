//! Partitions of `{0..n-1}` in canonical block-label form.
//!
//! `labels[i]` is the least element of the block containing `i`, so equality
//! of partitions is plain array equality and partitions can serve as map
//! keys. Union-find is used only transiently during closure operations.

use crate::error::{AlgError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

/// Transient union-find; canonicalized into a `Partition` when done.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the classes of `a` and `b`; true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller element as root so canonicalization is cheap
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let labels = (0..n).map(|i| self.find(i)).collect();
        Partition { labels }
    }
}

impl Partition {
    pub fn bottom(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    pub fn top(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    /// Canonicalize an arbitrary block-id assignment.
    pub fn from_raw_labels(raw: &[usize]) -> Self {
        let n = raw.len();
        let mut min_rep = std::collections::HashMap::new();
        for (i, &r) in raw.iter().enumerate() {
            min_rep.entry(r).or_insert(i);
        }
        Partition {
            labels: (0..n).map(|i| min_rep[&raw[i]]).collect(),
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(AlgError::ElementOutOfRange {
                    element: a.max(b),
                    size: n,
                });
            }
            uf.union(a, b);
        }
        Ok(uf.into_partition())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .count()
    }

    /// Blocks in ascending order of their minimum representative.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut where_of = std::collections::HashMap::new();
        for (i, &l) in self.labels.iter().enumerate() {
            match where_of.get(&l) {
                Some(&idx) => {
                    let block: &mut Vec<usize> = &mut out[idx];
                    block.push(i);
                }
                None => {
                    where_of.insert(l, out.len());
                    out.push(vec![i]);
                }
            }
        }
        out
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: usize) -> Vec<usize> {
        let l = self.labels[x];
        (0..self.size()).filter(|&i| self.labels[i] == l).collect()
    }

    pub fn is_bottom(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn is_top(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Refinement order: `self <= other` iff every block of `self` lies
    /// inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| other.labels[i] == other.labels[l])
    }

    pub fn join(&self, other: &Partition) -> Result<Partition> {
        if self.size() != other.size() {
            return Err(AlgError::SizeMismatch(self.size(), other.size()));
        }
        let mut uf = UnionFind::new(self.size());
        for i in 0..self.size() {
            uf.union(i, self.labels[i]);
            uf.union(i, other.labels[i]);
        }
        Ok(uf.into_partition())
    }

    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.size() != other.size() {
            return Err(AlgError::SizeMismatch(self.size(), other.size()));
        }
        let mut first = std::collections::HashMap::new();
        let labels = (0..self.size())
            .map(|i| *first.entry((self.labels[i], other.labels[i])).or_insert(i))
            .collect();
        Ok(Partition { labels })
    }

    /// All ordered related pairs, including the diagonal.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in 0..self.size() {
                if self.same(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Ordered related pairs with both entries inside `subset` (the
    /// restriction of the partition to a subset, as a set of pairs).
    pub fn pairs_within(&self, subset: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &a in subset {
            for &b in subset {
                if self.same(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Restriction of the partition to a subset, as a partition of positions
    /// `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let raw: Vec<usize> = subset.iter().map(|&x| self.labels[x]).collect();
        Partition::from_raw_labels(&raw)
    }

    /// Literal form: blocks ordered by minimum representative, elements
    /// ascending inside a block, e.g. `0 2|1 3`.
    pub fn literal(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parse a partition literal. Elements not mentioned become singletons;
    /// `top` and `bot` are accepted as shorthands.
    pub fn parse(literal: &str, n: usize) -> Result<Partition> {
        let lit = literal.trim();
        match lit {
            "top" => return Ok(Partition::top(n)),
            "bot" => return Ok(Partition::bottom(n)),
            _ => {}
        }
        let mut uf = UnionFind::new(n);
        let mut seen = vec![false; n];
        for block in lit.split('|') {
            let mut prev: Option<usize> = None;
            for tok in block.split_whitespace() {
                let x: usize = tok.parse().map_err(|_| AlgError::Parse {
                    file: "<partition>".into(),
                    line: 1,
                    token: tok.into(),
                    msg: "expected an element index".into(),
                })?;
                if x >= n {
                    return Err(AlgError::ElementOutOfRange {
                        element: x,
                        size: n,
                    });
                }
                if seen[x] {
                    return Err(AlgError::Parse {
                        file: "<partition>".into(),
                        line: 1,
                        token: tok.into(),
                        msg: "element listed twice".into(),
                    });
                }
                seen[x] = true;
                if let Some(p) = prev {
                    uf.union(p, x);
                }
                prev = Some(x);
            }
        }
        Ok(uf.into_partition())
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_and_meet() {
        let p1 = Partition::parse("0 1|2|3", 4).unwrap();
        let p2 = Partition::parse("0|1 2|3", 4).unwrap();
        assert_eq!(p1.join(&p2).unwrap().literal(), "0 1 2|3");
        let q1 = Partition::parse("0 2|1 3", 4).unwrap();
        let q2 = Partition::parse("0 1|2 3", 4).unwrap();
        assert!(q1.meet(&q2).unwrap().is_bottom());
        assert_eq!(p1.join(&Partition::bottom(4)).unwrap(), p1);
    }

    #[test]
    fn canonical_literals() {
        let p = Partition::parse("1 3|0 2", 4).unwrap();
        assert_eq!(p.literal(), "0 2|1 3");
        assert_eq!(Partition::bottom(3).literal(), "0|1|2");
        assert_eq!(Partition::top(3).literal(), "0 1 2");
        let round = Partition::parse(&p.literal(), 4).unwrap();
        assert_eq!(round, p);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Partition::parse("0 5", 4).is_err());
        assert!(Partition::parse("0 1|1 2", 4).is_err());
        assert!(Partition::parse("0 x", 4).is_err());
    }

    #[test]
    fn refinement_order() {
        let bot = Partition::bottom(4);
        let mid = Partition::parse("0 2|1 3", 4).unwrap();
        let top = Partition::top(4);
        assert!(bot.leq(&mid) && mid.leq(&top) && bot.leq(&top));
        assert!(!mid.leq(&bot) && !top.leq(&mid));
        let other = Partition::parse("0 1|2 3", 4).unwrap();
        assert!(!mid.leq(&other) && !other.leq(&mid));
    }
}
