//! Principal congruence generation, full congruence lattices, covers, and
//! subdirect-irreducibility analysis.

use std::collections::{HashMap, VecDeque};

use crate::algebra::{tuples, AlgebraOps};
use crate::error::{AlgError, Result};
use crate::partition::{Partition, UnionFind};
use crate::subpower::check_compatible;

pub const DEFAULT_CON_SIZE_BOUND: usize = 10;
pub const DEFAULT_LATTICE_CAP: usize = 1 << 16;

/// Least congruence identifying every pair in `pairs` (Mal'cev closure:
/// whenever two elements merge, the images of every unary polynomial
/// translate of the pair merge as well, to a fixpoint).
pub fn cg_from_pairs<A: AlgebraOps + ?Sized>(alg: &A, pairs: &[(usize, usize)]) -> Result<Partition> {
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for &(a, b) in pairs {
        if a >= n || b >= n {
            return Err(AlgError::ElementOutOfRange {
                element: a.max(b),
                size: n,
            });
        }
        if uf.union(a, b) {
            queue.push_back((a, b));
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for op in 0..alg.op_count() {
            let k = alg.op_arity(op);
            if k == 0 {
                continue;
            }
            for pos in 0..k {
                for params in tuples(n, k - 1) {
                    let mut args = Vec::with_capacity(k);
                    args.extend_from_slice(&params[..pos]);
                    args.push(x);
                    args.extend_from_slice(&params[pos..]);
                    let u = alg.op_apply(op, &args);
                    args[pos] = y;
                    let v = alg.op_apply(op, &args);
                    if uf.union(u, v) {
                        queue.push_back((u, v));
                    }
                }
            }
        }
    }
    Ok(uf.into_partition())
}

/// Principal congruence `Cg(a, b)`.
pub fn cg<A: AlgebraOps + ?Sized>(alg: &A, a: usize, b: usize) -> Result<Partition> {
    cg_from_pairs(alg, &[(a, b)])
}

/// The congruence lattice of a finite algebra: all congruences in a
/// deterministic order, Hasse covers, and cached join/meet tables.
#[derive(Debug, Clone)]
pub struct ConLattice {
    pub congruences: Vec<Partition>,
    /// Hasse cover edges `(lower, upper)` as indices into `congruences`.
    pub covers: Vec<(usize, usize)>,
    join_table: Vec<usize>,
    meet_table: Vec<usize>,
    leq: Vec<bool>,
    index: HashMap<Partition, usize>,
}

/// All congruences: join-closure of the principal congruences plus bottom.
pub fn con_all<A: AlgebraOps + ?Sized>(alg: &A, size_bound: usize, lattice_cap: usize) -> Result<ConLattice> {
    let n = alg.size();
    if n > size_bound {
        return Err(AlgError::cap("congruence lattice universe bound", size_bound));
    }
    let mut set: HashMap<Partition, usize> = HashMap::new();
    let mut list: Vec<Partition> = Vec::new();
    let mut push = |p: Partition, set: &mut HashMap<Partition, usize>, list: &mut Vec<Partition>| -> bool {
        if set.contains_key(&p) {
            false
        } else {
            set.insert(p.clone(), list.len());
            list.push(p);
            true
        }
    };
    push(Partition::bottom(n), &mut set, &mut list);
    for a in 0..n {
        for b in a + 1..n {
            let p = cg(alg, a, b)?;
            push(p, &mut set, &mut list);
        }
    }
    // join-closure
    let mut old = 0usize;
    loop {
        let cur = list.len();
        if cur == old {
            break;
        }
        if cur > lattice_cap {
            return Err(AlgError::cap("congruence lattice", lattice_cap));
        }
        for i in 0..cur {
            let start = if i >= old { 0 } else { old };
            for j in start..cur {
                let joined = list[i].join(&list[j])?;
                if push(joined, &mut set, &mut list) && list.len() > lattice_cap {
                    return Err(AlgError::cap("congruence lattice", lattice_cap));
                }
            }
        }
        old = cur;
    }

    // deterministic order: number of blocks descending, then canonical
    // label arrays lexicographically
    list.sort_by(|p, q| {
        q.num_blocks()
            .cmp(&p.num_blocks())
            .then_with(|| p.labels().cmp(q.labels()))
    });
    let index: HashMap<Partition, usize> = list
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let m = list.len();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = list[i].leq(&list[j]);
        }
    }
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !leq[i * m + j] {
                continue;
            }
            let mut is_cover = true;
            for k in 0..m {
                if k != i && k != j && leq[i * m + k] && leq[k * m + j] {
                    is_cover = false;
                    break;
                }
            }
            if is_cover {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    let mut join_table = vec![0usize; m * m];
    let mut meet_table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            let jn = list[i].join(&list[j])?;
            let mt = list[i].meet(&list[j])?;
            join_table[i * m + j] = *index.get(&jn).ok_or_else(|| {
                AlgError::Internal("congruence set not closed under join".into())
            })?;
            meet_table[i * m + j] = *index.get(&mt).ok_or_else(|| {
                AlgError::Internal("congruence set not closed under meet".into())
            })?;
        }
    }
    Ok(ConLattice {
        congruences: list,
        covers,
        join_table,
        meet_table,
        leq,
        index,
    })
}

impl ConLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.congruences.len() - 1
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join_table[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet_table[i * self.len() + j]
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == i)
            .map(|&(_, hi)| hi)
            .collect()
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == i)
            .map(|&(lo, _)| lo)
            .collect()
    }

    /// Atoms: upper covers of bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(self.bottom())
    }

    /// The least nontrivial congruence, if unique.
    pub fn monolith(&self) -> Option<usize> {
        let atoms = self.atoms();
        if atoms.len() == 1 {
            Some(atoms[0])
        } else {
            None
        }
    }

    /// Meet-irreducible congruences paired with their unique upper cover.
    pub fn meet_irreducibles(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter_map(|i| {
                let up = self.upper_covers(i);
                if up.len() == 1 {
                    Some((i, up[0]))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Indices in the closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.leq(lo, k) && self.leq(k, hi))
            .collect()
    }

    /// DOT rendering: one node per congruence labeled by its literal, one
    /// edge per Hasse cover (drawn upward).
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"{}\" {{\n", name));
        out.push_str("  rankdir=BT;\n");
        for (i, p) in self.congruences.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, p.literal()));
        }
        for &(lo, hi) in &self.covers {
            out.push_str(&format!("  n{} -> n{};\n", lo, hi));
        }
        out.push_str("}\n");
        out
    }
}

/// Verify that a partition is a congruence of `alg`.
pub fn is_congruence<A: AlgebraOps + ?Sized>(alg: &A, p: &Partition) -> Result<()> {
    check_compatible(alg, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteAlgebra, Operation};

    fn z4() -> FiniteAlgebra {
        let table = (0..16).map(|i| (i / 4 + i % 4) % 4).collect();
        FiniteAlgebra::new("z4", 4, vec![Operation::new("add", 2, 4, table).unwrap()]).unwrap()
    }

    fn s2() -> FiniteAlgebra {
        FiniteAlgebra::new(
            "s2",
            2,
            vec![Operation::new("meet", 2, 2, vec![0, 0, 0, 1]).unwrap()],
        )
        .unwrap()
    }

    fn s2_squared() -> FiniteAlgebra {
        crate::subpower::direct_power(&s2(), 2, 1 << 20).unwrap()
    }

    #[test]
    fn cg_on_z4() {
        let a = z4();
        assert_eq!(cg(&a, 0, 2).unwrap().literal(), "0 2|1 3");
        assert!(cg(&a, 1, 1).unwrap().is_bottom());
        // adding 1 to both sides of 0~1 forces everything together
        assert!(cg(&a, 0, 1).unwrap().is_top());
    }

    #[test]
    fn cg_on_two_element_algebras() {
        let a = s2();
        assert!(cg(&a, 0, 1).unwrap().is_top());
    }

    #[test]
    fn con_of_z4_is_a_three_chain() {
        let a = z4();
        let lat = con_all(&a, 10, 1 << 16).unwrap();
        assert_eq!(lat.len(), 3);
        assert_eq!(lat.congruences[1].literal(), "0 2|1 3");
        assert_eq!(lat.covers, vec![(0, 1), (1, 2)]);
        assert_eq!(lat.monolith(), Some(1));
        assert_eq!(lat.meet_irreducibles(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn con_of_s2() {
        let lat = con_all(&s2(), 10, 1 << 16).unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.monolith(), Some(1));
        assert_eq!(lat.meet_irreducibles(), vec![(0, 1)]);
    }

    #[test]
    fn con_of_one_element_algebra() {
        let one = FiniteAlgebra::new("one", 1, vec![]).unwrap();
        let lat = con_all(&one, 10, 1 << 16).unwrap();
        assert_eq!(lat.len(), 1);
        assert!(lat.covers.is_empty());
        assert_eq!(lat.monolith(), None);
    }

    #[test]
    fn s2_squared_is_not_si() {
        let lat = con_all(&s2_squared(), 10, 1 << 16).unwrap();
        assert_eq!(lat.monolith(), None);
        assert_eq!(lat.atoms().len(), 2);
    }

    #[test]
    fn every_lattice_member_is_a_congruence_and_closed() {
        let a = z4();
        let lat = con_all(&a, 10, 1 << 16).unwrap();
        for p in &lat.congruences {
            is_congruence(&a, p).unwrap();
        }
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                let jn = lat.congruences[i].join(&lat.congruences[j]).unwrap();
                let mt = lat.congruences[i].meet(&lat.congruences[j]).unwrap();
                assert_eq!(lat.index_of(&jn), Some(lat.join(i, j)));
                assert_eq!(lat.index_of(&mt), Some(lat.meet(i, j)));
            }
        }
    }

    #[test]
    fn quotient_congruence_correspondence() {
        // congruences of A/theta correspond to congruences of A above theta
        let a = z4();
        let theta = Partition::parse("0 2|1 3", 4).unwrap();
        let q = crate::subpower::quotient(&a, &theta).unwrap();
        let lat_a = con_all(&a, 10, 1 << 16).unwrap();
        let above: Vec<_> = lat_a
            .congruences
            .iter()
            .filter(|p| theta.leq(p))
            .collect();
        let lat_q = con_all(&q, 10, 1 << 16).unwrap();
        assert_eq!(above.len(), lat_q.len());
    }

    #[test]
    fn dot_output_shape() {
        let lat = con_all(&z4(), 10, 1 << 16).unwrap();
        let dot = lat.to_dot("z4");
        assert!(dot.contains("n0 [label=\"0|1|2|3\"]"));
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("n1 -> n2;"));
    }
}
