//! Closure-based subuniverse generation in powers, plus the standard
//! constructions: direct products and powers, subalgebras, quotients, and
//! free algebras.
//!
//! The closure engine works over any `AlgebraOps` so it can run on virtual
//! pair algebras and subpower views without materializing their tables.

use std::collections::HashMap;

use crate::algebra::{decode_tuple, tuples, AlgebraOps, FiniteAlgebra, Operation};
use crate::error::{AlgError, Result};
use crate::partition::Partition;

pub const DEFAULT_ELEMENT_CAP: usize = 1 << 20;

/// How a closure element came to exist. Indices refer to the closure's
/// insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Generator(usize),
    Derived { op: usize, args: Vec<usize> },
}

/// Result of a subuniverse closure, in deterministic insertion order,
/// with enough provenance to rebuild a term skeleton for any element.
#[derive(Debug, Clone)]
pub struct Closure {
    pub width: usize,
    pub elements: Vec<Vec<usize>>,
    pub provenance: Vec<Provenance>,
    index: HashMap<Vec<usize>, usize>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, el: &[usize]) -> bool {
        self.index.contains_key(el)
    }

    pub fn position(&self, el: &[usize]) -> Option<usize> {
        self.index.get(el).copied()
    }

    /// Elements in canonical order: lexicographic by coordinates.
    pub fn sorted_elements(&self) -> Vec<Vec<usize>> {
        let mut out = self.elements.clone();
        out.sort();
        out
    }

    /// Term skeleton for an element: generator leaves are `Term::Var(g)`
    /// where `g` is the generator index.
    pub fn skeleton<A: AlgebraOps + ?Sized>(&self, alg: &A, idx: usize) -> crate::algebra::Term {
        match &self.provenance[idx] {
            Provenance::Generator(g) => crate::algebra::Term::Var(*g),
            Provenance::Derived { op, args } => crate::algebra::Term::App(
                alg.op_name(*op).to_string(),
                args.iter().map(|&a| self.skeleton(alg, a)).collect(),
            ),
        }
    }

    /// Evaluate the skeleton of element `idx` after substituting
    /// `leaf_values[g]` for generator `g`, in the base algebra.
    pub fn eval_skeleton<A: AlgebraOps + ?Sized>(
        &self,
        alg: &A,
        idx: usize,
        leaf_values: &[usize],
    ) -> usize {
        match &self.provenance[idx] {
            Provenance::Generator(g) => leaf_values[*g],
            Provenance::Derived { op, args } => {
                let vals: Vec<usize> = args
                    .iter()
                    .map(|&a| self.eval_skeleton(alg, a, leaf_values))
                    .collect();
                alg.op_apply(*op, &vals)
            }
        }
    }

    /// Generator indices appearing in the skeleton of element `idx`.
    pub fn leaves(&self, idx: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![idx];
        while let Some(i) = stack.pop() {
            match &self.provenance[i] {
                Provenance::Generator(g) => out.push(*g),
                Provenance::Derived { args, .. } => stack.extend(args.iter().copied()),
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Least subset of `A^width` containing `gens` and closed under all
/// coordinatewise basic operations. Deterministic insertion order; errors
/// out (never truncates) when the closure exceeds `cap` elements.
pub fn generate_subuniverse<A: AlgebraOps + ?Sized>(
    alg: &A,
    width: usize,
    gens: &[Vec<usize>],
    cap: usize,
) -> Result<Closure> {
    let n = alg.size();
    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut provenance: Vec<Provenance> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();

    for (g, el) in gens.iter().enumerate() {
        if el.len() != width {
            return Err(AlgError::SizeMismatch(el.len(), width));
        }
        if let Some(&bad) = el.iter().find(|&&x| x >= n) {
            return Err(AlgError::ElementOutOfRange {
                element: bad,
                size: n,
            });
        }
        if !index.contains_key(el) {
            index.insert(el.clone(), elements.len());
            elements.push(el.clone());
            provenance.push(Provenance::Generator(g));
        }
    }

    // nullary operations contribute constant tuples
    for op in 0..alg.op_count() {
        if alg.op_arity(op) == 0 {
            let el = vec![alg.op_apply(op, &[]); width];
            if !index.contains_key(&el) {
                index.insert(el.clone(), elements.len());
                elements.push(el);
                provenance.push(Provenance::Derived {
                    op,
                    args: Vec::new(),
                });
            }
        }
    }

    // staged closure: each round applies every operation to all argument
    // tuples that involve at least one element discovered since the last
    // round, enumerated lexicographically for determinism
    let mut old = 0usize;
    loop {
        let cur = elements.len();
        if cur == old {
            break;
        }
        for op in 0..alg.op_count() {
            let k = alg.op_arity(op);
            if k == 0 {
                continue;
            }
            let mut args = vec![0usize; k];
            new_arg_tuples(old, cur, k, &mut args, 0, false, &mut |args| {
                let mut value = Vec::with_capacity(width);
                for coord in 0..width {
                    let pointwise: Vec<usize> =
                        args.iter().map(|&a| elements[a][coord]).collect();
                    value.push(alg.op_apply(op, &pointwise));
                }
                if !index.contains_key(&value) {
                    if elements.len() >= cap {
                        return Err(AlgError::cap("subuniverse closure", cap));
                    }
                    index.insert(value.clone(), elements.len());
                    elements.push(value);
                    provenance.push(Provenance::Derived {
                        op,
                        args: args.to_vec(),
                    });
                }
                Ok(())
            })?;
        }
        old = cur;
    }

    Ok(Closure {
        width,
        elements,
        provenance,
        index,
    })
}

/// Enumerate, in lexicographic order, all tuples over `0..cur` of length `k`
/// having at least one entry `>= old`.
fn new_arg_tuples<F: FnMut(&[usize]) -> Result<()>>(
    old: usize,
    cur: usize,
    k: usize,
    args: &mut Vec<usize>,
    pos: usize,
    has_new: bool,
    f: &mut F,
) -> Result<()> {
    if pos == k {
        return f(args);
    }
    let remaining = k - pos - 1;
    for v in 0..cur {
        let now_new = has_new || v >= old;
        // if no new index has been chosen and none can come later, skip ahead
        if !now_new && remaining == 0 {
            continue;
        }
        args[pos] = v;
        new_arg_tuples(old, cur, k, args, pos + 1, now_new, f)?;
    }
    Ok(())
}

/// A subpower materialized as a virtual algebra: elements are tuples over
/// the base algebra, operations act coordinatewise. The element list must be
/// closed under the base operations.
pub struct SubpowerView<'a, A: AlgebraOps + ?Sized> {
    pub base: &'a A,
    pub elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl<'a, A: AlgebraOps + ?Sized> SubpowerView<'a, A> {
    pub fn new(base: &'a A, elements: Vec<Vec<usize>>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        SubpowerView {
            base,
            elements,
            index,
        }
    }

    pub fn position(&self, el: &[usize]) -> Option<usize> {
        self.index.get(el).copied()
    }
}

impl<'a, A: AlgebraOps + ?Sized> AlgebraOps for SubpowerView<'a, A> {
    fn size(&self) -> usize {
        self.elements.len()
    }
    fn op_count(&self) -> usize {
        self.base.op_count()
    }
    fn op_arity(&self, op: usize) -> usize {
        self.base.op_arity(op)
    }
    fn op_name(&self, op: usize) -> &str {
        self.base.op_name(op)
    }
    fn op_apply(&self, op: usize, args: &[usize]) -> usize {
        let width = self.elements.first().map_or(0, |e| e.len());
        let mut value = Vec::with_capacity(width);
        for coord in 0..width {
            let pointwise: Vec<usize> = args
                .iter()
                .map(|&a| self.elements[a][coord])
                .collect();
            value.push(self.base.op_apply(op, &pointwise));
        }
        *self
            .index
            .get(&value)
            .unwrap_or_else(|| panic!("subpower view is not closed under {}", self.op_name(op)))
    }
}

/// The direct square of an algebra viewed virtually: element `x*n + y`
/// stands for the pair `(x, y)` and operations act componentwise.
pub struct PairView<'a, A: AlgebraOps + ?Sized> {
    pub base: &'a A,
}

impl<'a, A: AlgebraOps + ?Sized> PairView<'a, A> {
    pub fn new(base: &'a A) -> Self {
        PairView { base }
    }

    pub fn encode(&self, x: usize, y: usize) -> usize {
        x * self.base.size() + y
    }

    pub fn decode(&self, p: usize) -> (usize, usize) {
        (p / self.base.size(), p % self.base.size())
    }
}

impl<'a, A: AlgebraOps + ?Sized> AlgebraOps for PairView<'a, A> {
    fn size(&self) -> usize {
        self.base.size() * self.base.size()
    }
    fn op_count(&self) -> usize {
        self.base.op_count()
    }
    fn op_arity(&self, op: usize) -> usize {
        self.base.op_arity(op)
    }
    fn op_name(&self, op: usize) -> &str {
        self.base.op_name(op)
    }
    fn op_apply(&self, op: usize, args: &[usize]) -> usize {
        let n = self.base.size();
        let firsts: Vec<usize> = args.iter().map(|&a| a / n).collect();
        let seconds: Vec<usize> = args.iter().map(|&a| a % n).collect();
        self.base.op_apply(op, &firsts) * n + self.base.op_apply(op, &seconds)
    }
}

/// Direct product of algebras over the same signature; coordinates of the
/// product universe are enumerated lexicographically (first factor most
/// significant).
pub fn direct_product(factors: &[&FiniteAlgebra], table_cap: usize) -> Result<FiniteAlgebra> {
    if factors.is_empty() {
        return Err(AlgError::InvalidArgument(
            "product needs at least one factor".into(),
        ));
    }
    let first = factors[0];
    for f in factors {
        if f.ops().len() != first.ops().len()
            || f.ops()
                .iter()
                .zip(first.ops())
                .any(|(a, b)| a.name != b.name || a.arity != b.arity)
        {
            return Err(AlgError::InvalidArgument(
                "product factors must share a signature".into(),
            ));
        }
    }
    let mut size = 1usize;
    for f in factors {
        size = size
            .checked_mul(f.size())
            .ok_or_else(|| AlgError::cap("product universe", table_cap))?;
    }
    let radices: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut coords = vec![0; radices.len()];
        for j in (0..radices.len()).rev() {
            coords[j] = idx % radices[j];
            idx /= radices[j];
        }
        coords
    };

    let mut ops = Vec::new();
    for (oi, proto) in first.ops().iter().enumerate() {
        let k = proto.arity;
        let entries = size
            .checked_pow(k as u32)
            .filter(|&e| e <= table_cap)
            .ok_or_else(|| AlgError::cap("product operation table", table_cap))?;
        let mut table = Vec::with_capacity(entries);
        for args in tuples(size, k) {
            let arg_coords: Vec<Vec<usize>> = args.iter().map(|&a| decode(a)).collect();
            let mut value = 0usize;
            for (j, f) in factors.iter().enumerate() {
                let pointwise: Vec<usize> = arg_coords.iter().map(|c| c[j]).collect();
                value = value * f.size() + f.ops()[oi].apply(f.size(), &pointwise);
            }
            table.push(value);
        }
        ops.push(Operation::new(proto.name.clone(), k, size, table)?);
    }
    let name = factors
        .iter()
        .map(|f| f.name.clone())
        .collect::<Vec<_>>()
        .join("x");
    FiniteAlgebra::new(name, size, ops)
}

/// `A^k` with lexicographic coordinate enumeration.
pub fn direct_power(alg: &FiniteAlgebra, k: usize, table_cap: usize) -> Result<FiniteAlgebra> {
    if k == 0 {
        return FiniteAlgebra::new(
            format!("{}^0", alg.name),
            1,
            alg.ops()
                .iter()
                .map(|o| Operation::new(o.name.clone(), o.arity, 1, vec![0; 1]))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let factors: Vec<&FiniteAlgebra> = std::iter::repeat(alg).take(k).collect();
    let mut out = direct_product(&factors, table_cap)?;
    out.name = format!("{}^{}", alg.name, k);
    Ok(out)
}

/// The subalgebra on `subset`, which must be closed under every operation;
/// elements are renumbered ascending.
pub fn subalgebra_from_subset(alg: &FiniteAlgebra, subset: &[usize]) -> Result<FiniteAlgebra> {
    let mut sub: Vec<usize> = subset.to_vec();
    sub.sort_unstable();
    sub.dedup();
    if sub.is_empty() {
        return Err(AlgError::InvalidArgument(
            "subalgebra must be nonempty".into(),
        ));
    }
    for &x in &sub {
        alg.check_element(x)?;
    }
    let position: HashMap<usize, usize> = sub.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = sub.len();
    let mut ops = Vec::new();
    for op in alg.ops() {
        let mut table = Vec::with_capacity(m.pow(op.arity as u32));
        for args in tuples(m, op.arity) {
            let real: Vec<usize> = args.iter().map(|&a| sub[a]).collect();
            let v = op.apply(alg.size(), &real);
            match position.get(&v) {
                Some(&p) => table.push(p),
                None => {
                    return Err(AlgError::NotClosed {
                        op: op.name.clone(),
                        args: real,
                        value: v,
                    })
                }
            }
        }
        ops.push(Operation::new(op.name.clone(), op.arity, m, table)?);
    }
    FiniteAlgebra::new(format!("{}|sub", alg.name), m, ops)
}

/// Check that `theta` is a congruence: every operation must map related
/// argument tuples to related values. Single-coordinate shifts suffice.
pub fn check_compatible<A: AlgebraOps + ?Sized>(alg: &A, theta: &Partition) -> Result<()> {
    let n = alg.size();
    if theta.size() != n {
        return Err(AlgError::SizeMismatch(theta.size(), n));
    }
    for op in 0..alg.op_count() {
        let k = alg.op_arity(op);
        if k == 0 {
            continue;
        }
        for args in tuples(n, k) {
            let v = alg.op_apply(op, &args);
            for pos in 0..k {
                for b in args[pos] + 1..n {
                    if !theta.same(args[pos], b) {
                        continue;
                    }
                    let mut shifted = args.clone();
                    shifted[pos] = b;
                    let w = alg.op_apply(op, &shifted);
                    if !theta.same(v, w) {
                        return Err(AlgError::NotCompatible {
                            op: alg.op_name(op).to_string(),
                            left: args.clone(),
                            right: shifted,
                            out_left: v,
                            out_right: w,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Quotient algebra `A / theta`. Blocks are numbered by ascending minimum
/// representative; compatibility is checked, naming the violating operation
/// and tuple pair on failure.
pub fn quotient(alg: &FiniteAlgebra, theta: &Partition) -> Result<FiniteAlgebra> {
    check_compatible(alg, theta)?;
    let blocks = theta.blocks();
    let m = blocks.len();
    let block_no: HashMap<usize, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b[0], i))
        .collect();
    let class_of = |x: usize| block_no[&theta.label(x)];
    let mut ops = Vec::new();
    for op in alg.ops() {
        let mut table = Vec::with_capacity(m.pow(op.arity as u32));
        for args in tuples(m, op.arity) {
            let reps: Vec<usize> = args.iter().map(|&a| blocks[a][0]).collect();
            table.push(class_of(op.apply(alg.size(), &reps)));
        }
        ops.push(Operation::new(op.name.clone(), op.arity, m, table)?);
    }
    FiniteAlgebra::new(format!("{}/q", alg.name), m, ops)
}

/// The free algebra on `k` generators in the variety generated by `alg`,
/// materialized as the subalgebra of `A^(A^k)` generated by the projections.
/// Elements are term-function tables in canonical (lexicographic) order.
pub fn free_algebra(alg: &FiniteAlgebra, k: usize, cap: usize) -> Result<FiniteAlgebra> {
    let n = alg.size();
    let width = n
        .checked_pow(k as u32)
        .filter(|&w| w <= cap)
        .ok_or_else(|| AlgError::cap("free algebra index set", cap))?;
    let mut gens = Vec::with_capacity(k);
    for j in 0..k {
        let mut proj = Vec::with_capacity(width);
        for idx in 0..width {
            proj.push(decode_tuple(idx, n, k)[j]);
        }
        gens.push(proj);
    }
    let closure = generate_subuniverse(alg, width, &gens, cap)?;
    let elements = closure.sorted_elements();
    let m = elements.len();
    let position: HashMap<&Vec<usize>, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut ops = Vec::new();
    for (oi, proto) in alg.ops().iter().enumerate() {
        let arity = proto.arity;
        let entries = m
            .checked_pow(arity as u32)
            .filter(|&e| e <= cap)
            .ok_or_else(|| AlgError::cap("free algebra operation table", cap))?;
        let mut table = Vec::with_capacity(entries);
        for args in tuples(m, arity) {
            let mut value = Vec::with_capacity(width);
            for coord in 0..width {
                let pointwise: Vec<usize> =
                    args.iter().map(|&a| elements[a][coord]).collect();
                value.push(alg.op_apply(oi, &pointwise));
            }
            table.push(position[&value]);
        }
        ops.push(Operation::new(proto.name.clone(), arity, m, table)?);
    }
    FiniteAlgebra::new(format!("F({},{})", alg.name, k), m, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Term;

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

    fn b2() -> FiniteAlgebra {
        FiniteAlgebra::new(
            "b2",
            2,
            vec![
                Operation::new("meet", 2, 2, vec![0, 0, 0, 1]).unwrap(),
                Operation::new("join", 2, 2, vec![0, 1, 1, 1]).unwrap(),
                Operation::new("not", 1, 2, vec![1, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn closure_in_square_of_semilattice() {
        // close {(0,0),(1,1),(1,0)} under coordinatewise meet by hand:
        // (1,0) meet (1,1) = (1,0), nothing new appears
        let a = s2();
        let gens = vec![vec![0, 0], vec![1, 1], vec![1, 0]];
        let c = generate_subuniverse(&a, 2, &gens, 1 << 10).unwrap();
        assert_eq!(
            c.sorted_elements(),
            vec![vec![0, 0], vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn one_generates_z4() {
        let a = z4();
        let c = generate_subuniverse(&a, 1, &[vec![1]], 1 << 10).unwrap();
        assert_eq!(
            c.sorted_elements(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn diagonal_is_a_subalgebra_of_b2_squared() {
        let a = b2();
        let c = generate_subuniverse(&a, 2, &[vec![0, 0], vec![1, 1]], 1 << 10).unwrap();
        assert_eq!(c.sorted_elements(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let a = s2();
        let gens = vec![vec![0, 1], vec![1, 0]];
        let c1 = generate_subuniverse(&a, 2, &gens, 1 << 10).unwrap();
        let again = generate_subuniverse(&a, 2, &c1.sorted_elements(), 1 << 10).unwrap();
        assert_eq!(c1.sorted_elements(), again.sorted_elements());
        let bigger =
            generate_subuniverse(&a, 2, &[gens[0].clone(), gens[1].clone(), vec![1, 1]], 1 << 10)
                .unwrap();
        for el in c1.sorted_elements() {
            assert!(bigger.contains(&el));
        }
    }

    #[test]
    fn cap_overflow_is_an_error() {
        let a = z4();
        let err = generate_subuniverse(&a, 1, &[vec![1]], 2).unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn quotient_of_z4_is_z2() {
        let a = z4();
        let theta = Partition::parse("0 2|1 3", 4).unwrap();
        let q = quotient(&a, &theta).unwrap();
        assert_eq!(q.size(), 2);
        // induced table is addition mod 2
        assert_eq!(q.ops()[0].table, vec![0, 1, 1, 0]);
    }

    #[test]
    fn quotient_by_bottom_and_top() {
        let a = z4();
        let q = quotient(&a, &Partition::bottom(4)).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.ops()[0].table, a.ops()[0].table);
        let q = quotient(&a, &Partition::top(4)).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn quotient_rejects_incompatible_partition() {
        let a = z4();
        let theta = Partition::parse("0 1|2|3", 4).unwrap();
        let err = quotient(&a, &theta).unwrap_err();
        assert!(matches!(err, AlgError::NotCompatible { op, .. } if op == "add"));
    }

    #[test]
    fn power_of_semilattice() {
        let a = s2();
        let p = direct_power(&a, 2, 1 << 20).unwrap();
        assert_eq!(p.size(), 4);
        // (1,0) meet (0,1) = (0,0): elements 2 and 1 meet to 0
        assert_eq!(p.ops()[0].apply(4, &[2, 1]), 0);
    }

    #[test]
    fn subalgebra_of_z4_on_evens() {
        let a = z4();
        let s = subalgebra_from_subset(&a, &[0, 2]).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.ops()[0].table, vec![0, 1, 1, 0]); // 2+2=0
    }

    #[test]
    fn subalgebra_rejects_unclosed_subset() {
        let a = z4();
        let err = subalgebra_from_subset(&a, &[0, 1]).unwrap_err();
        assert_eq!(
            err,
            AlgError::NotClosed {
                op: "add".into(),
                args: vec![1, 1],
                value: 2
            }
        );
    }

    #[test]
    fn free_semilattice_on_two_generators() {
        let a = s2();
        let f = free_algebra(&a, 2, 1 << 16).unwrap();
        assert_eq!(f.size(), 3); // p1, p2, p1 meet p2
        let f1 = free_algebra(&a, 1, 1 << 16).unwrap();
        assert_eq!(f1.size(), 1);
    }

    #[test]
    fn free_boolean_on_one_generator() {
        let a = b2();
        let f = free_algebra(&a, 1, 1 << 16).unwrap();
        assert_eq!(f.size(), 4); // id, not, const 0, const 1
    }

    #[test]
    fn free_size_is_isomorphism_invariant() {
        // rename z4's universe by x -> 3 - x and rebuild the table
        let a = z4();
        let perm = [3usize, 2, 1, 0];
        let mut table = vec![0usize; 16];
        for x in 0..4 {
            for y in 0..4 {
                let inv = |v: usize| perm.iter().position(|&p| p == v).unwrap();
                table[x * 4 + y] = perm[(inv(x) + inv(y)) % 4];
            }
        }
        let b = FiniteAlgebra::new("z4r", 4, vec![Operation::new("add", 2, 4, table).unwrap()])
            .unwrap();
        let fa = free_algebra(&a, 2, 1 << 16).unwrap();
        let fb = free_algebra(&b, 2, 1 << 16).unwrap();
        assert_eq!(fa.size(), fb.size());
    }

    #[test]
    fn eval_matches_skeleton_eval() {
        let a = z4();
        let c = generate_subuniverse(&a, 2, &[vec![1, 0], vec![0, 1]], 1 << 10).unwrap();
        for idx in 0..c.len() {
            let skel = c.skeleton(&a, idx);
            // skeleton variables are generator indices; evaluating the
            // skeleton coordinatewise must reproduce the element
            for coord in 0..2 {
                let leaf_vals: Vec<usize> =
                    vec![c.elements[0][coord], c.elements[1][coord]];
                let direct = c.eval_skeleton(&a, idx, &leaf_vals);
                assert_eq!(direct, c.elements[idx][coord]);
                let via_term = a.eval(&skel, &leaf_vals).unwrap();
                assert_eq!(via_term, direct);
            }
        }
    }
}
