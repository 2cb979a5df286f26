//! Finite algebras as flat operation tables, plus term trees and evaluation.
//!
//! Elements are dense integers `0..n-1`. An operation of arity `k` stores its
//! table as `n^k` entries in lexicographic argument order with the first
//! argument most significant, so `table[a0*n^(k-1) + a1*n^(k-2) + ... + ak-1]`
//! is the value at `(a0, ..., ak-1)`.

use crate::error::{AlgError, Result};

/// Anything that behaves like a finite algebra: a universe `0..size()` and a
/// list of finitary operations evaluated on demand.
///
/// `FiniteAlgebra` stores explicit tables; subpowers and pair algebras
/// implement the trait virtually so that closure and congruence routines can
/// run on them without materializing enormous tables.
pub trait AlgebraOps {
    fn size(&self) -> usize;
    fn op_count(&self) -> usize;
    fn op_arity(&self, op: usize) -> usize;
    fn op_name(&self, op: usize) -> &str;
    /// Apply operation `op` to `args` (length must equal the arity, entries in range).
    fn op_apply(&self, op: usize, args: &[usize]) -> usize;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operation {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Operation {
    pub fn new(name: impl Into<String>, arity: usize, size: usize, table: Vec<usize>) -> Result<Self> {
        let name = name.into();
        let expected = size.checked_pow(arity as u32).ok_or_else(|| AlgError::BadTable {
            op: name.clone(),
            expected: usize::MAX,
            got: table.len(),
        })?;
        if table.len() != expected {
            return Err(AlgError::BadTable {
                op: name,
                expected,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= size) {
            return Err(AlgError::ElementOutOfRange {
                element: bad,
                size,
            });
        }
        Ok(Operation { name, arity, table })
    }

    /// Value at an argument tuple; `size` is the universe size of the owning algebra.
    #[inline]
    pub fn apply(&self, size: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0usize;
        for &a in args {
            idx = idx * size + a;
        }
        self.table[idx]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub name: String,
    size: usize,
    ops: Vec<Operation>,
}

impl FiniteAlgebra {
    pub fn new(name: impl Into<String>, size: usize, ops: Vec<Operation>) -> Result<Self> {
        if size == 0 {
            return Err(AlgError::InvalidArgument(
                "algebra must have at least one element".into(),
            ));
        }
        let name = name.into();
        for op in &ops {
            // re-validate against this universe
            Operation::new(op.name.clone(), op.arity, size, op.table.clone())?;
        }
        Ok(FiniteAlgebra { name, size, ops })
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn op_by_name(&self, name: &str) -> Option<&Operation> {
        self.ops.iter().find(|o| o.name == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(AlgError::ElementOutOfRange {
                element: x,
                size: self.size,
            })
        }
    }

    /// Evaluate a term at an argument tuple for its variables.
    pub fn eval(&self, term: &Term, args: &[usize]) -> Result<usize> {
        for &a in args {
            self.check_element(a)?;
        }
        self.eval_inner(term, args)
    }

    fn eval_inner(&self, term: &Term, args: &[usize]) -> Result<usize> {
        match term {
            Term::Var(i) => args.get(*i).copied().ok_or(AlgError::UnboundVariable(*i)),
            Term::Const(c) => {
                self.check_element(*c)?;
                Ok(*c)
            }
            Term::App(name, sub) => {
                let op = self
                    .op_by_name(name)
                    .ok_or_else(|| AlgError::UnknownOperation(name.clone()))?;
                if op.arity != sub.len() {
                    return Err(AlgError::ArityMismatch {
                        op: name.clone(),
                        expected: op.arity,
                        got: sub.len(),
                    });
                }
                let vals = sub
                    .iter()
                    .map(|t| self.eval_inner(t, args))
                    .collect::<Result<Vec<_>>>()?;
                Ok(op.apply(self.size, &vals))
            }
        }
    }
}

impl AlgebraOps for FiniteAlgebra {
    fn size(&self) -> usize {
        self.size
    }
    fn op_count(&self) -> usize {
        self.ops.len()
    }
    fn op_arity(&self, op: usize) -> usize {
        self.ops[op].arity
    }
    fn op_name(&self, op: usize) -> &str {
        &self.ops[op].name
    }
    fn op_apply(&self, op: usize, args: &[usize]) -> usize {
        self.ops[op].apply(self.size, args)
    }
}

/// A term tree over one algebra's signature: variables, constant elements,
/// and operation applications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Const(usize),
    App(String, Vec<Term>),
}

impl Term {
    /// Largest variable index occurring, plus one.
    pub fn var_span(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Const(_) => 0,
            Term::App(_, sub) => sub.iter().map(|t| t.var_span()).max().unwrap_or(0),
        }
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Const(_) => {}
            Term::App(_, sub) => sub.iter().for_each(|t| t.collect_vars(out)),
        }
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Term::Var(i) => write!(f, "v{i}"),
            Term::Const(c) => write!(f, "{c}"),
            Term::App(name, sub) => {
                write!(f, "{name}(")?;
                for (i, t) in sub.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Iterate over all tuples of length `len` with entries in `0..base`, in
/// lexicographic order (first coordinate most significant).
pub fn tuples(base: usize, len: usize) -> TupleIter {
    TupleIter {
        base,
        current: vec![0; len],
        done: base == 0 && len > 0,
        fresh: true,
    }
}

pub struct TupleIter {
    base: usize,
    current: Vec<usize>,
    done: bool,
    fresh: bool,
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current.clone());
        }
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.base {
                break;
            }
            self.current[i] = 0;
        }
        Some(self.current.clone())
    }
}

/// Decode a lexicographic tuple index into the tuple itself.
pub fn decode_tuple(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

/// Encode a tuple into its lexicographic index.
pub fn encode_tuple(tuple: &[usize], base: usize) -> usize {
    let mut idx = 0;
    for &t in tuple {
        idx = idx * base + t;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn eval_mod4_addition() {
        let a = z4();
        let t = Term::App("add".into(), vec![Term::Var(0), Term::Var(1)]);
        assert_eq!(a.eval(&t, &[1, 3]).unwrap(), 0);
    }

    #[test]
    fn eval_idempotent_meet() {
        let a = s2();
        let t = Term::App("meet".into(), vec![Term::Var(0), Term::Var(0)]);
        assert_eq!(a.eval(&t, &[1]).unwrap(), 1);
    }

    #[test]
    fn eval_negated_meet() {
        let a = b2();
        let t = Term::App(
            "not".into(),
            vec![Term::App("meet".into(), vec![Term::Var(0), Term::Var(1)])],
        );
        assert_eq!(a.eval(&t, &[1, 1]).unwrap(), 0);
    }

    #[test]
    fn eval_errors() {
        let a = s2();
        let t = Term::App("join".into(), vec![Term::Var(0), Term::Var(1)]);
        assert!(matches!(
            a.eval(&t, &[0, 1]),
            Err(AlgError::UnknownOperation(_))
        ));
        let t = Term::App("meet".into(), vec![Term::Var(0)]);
        assert!(matches!(
            a.eval(&t, &[0]),
            Err(AlgError::ArityMismatch { .. })
        ));
        let t = Term::Var(2);
        assert!(matches!(
            a.eval(&t, &[0, 1]),
            Err(AlgError::UnboundVariable(2))
        ));
        let t = Term::Var(0);
        assert!(matches!(
            a.eval(&t, &[7]),
            Err(AlgError::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn tuple_roundtrip() {
        for (i, t) in tuples(3, 2).enumerate() {
            assert_eq!(encode_tuple(&t, 3), i);
            assert_eq!(decode_tuple(i, 3, 2), t);
        }
        assert_eq!(tuples(3, 0).count(), 1);
    }
}
