//! Restricted polynomial clones, induced algebras, polynomial permutation
//! groups, and twin groups.
//!
//! The k-ary polynomial restrictions to a subset `U` are computed as the
//! subuniverse of `A^(U^k)` generated by the `k` projections and all
//! constant maps; term enumeration is never used.

use std::collections::HashMap;

use crate::algebra::{decode_tuple, encode_tuple, AlgebraOps, FiniteAlgebra, Operation};
use crate::error::{AlgError, Result};
use crate::partition::Partition;
use crate::subpower::{generate_subuniverse, Closure, PairView};

/// A finitary function from `domain^arity` into the full universe, stored
/// as a flat table in lexicographic argument order. Arguments are actual
/// elements of `domain`; values may fall anywhere in the universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyTable {
    pub domain: Vec<usize>,
    pub arity: usize,
    pub values: Vec<usize>,
}

impl PolyTable {
    pub fn new(domain: Vec<usize>, arity: usize, values: Vec<usize>) -> Self {
        debug_assert_eq!(values.len(), domain.len().pow(arity as u32));
        PolyTable {
            domain,
            arity,
            values,
        }
    }

    fn pos_of(&self, x: usize) -> usize {
        self.domain
            .iter()
            .position(|&d| d == x)
            .unwrap_or_else(|| panic!("element {x} outside table domain"))
    }

    /// Apply to actual elements (each must lie in the domain).
    pub fn apply(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0usize;
        for &a in args {
            idx = idx * self.domain.len() + self.pos_of(a);
        }
        self.values[idx]
    }

    /// Image of the table.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.values.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Unary only: is this table idempotent (`f(f(x)) = f(x)`)? Requires the
    /// image to lie inside the domain.
    pub fn is_idempotent(&self) -> bool {
        self.arity == 1
            && self.values.iter().all(|&v| {
                self.domain.contains(&v) && self.apply(&[v]) == v
            })
    }

    /// Unary only: compose `self` after `other` (both unary on the same
    /// domain with values inside it).
    pub fn compose(&self, other: &PolyTable) -> PolyTable {
        debug_assert_eq!(self.domain, other.domain);
        let values = other.values.iter().map(|&v| self.apply(&[v])).collect();
        PolyTable::new(self.domain.clone(), 1, values)
    }

    /// Does the table map its domain power into the given subset?
    pub fn maps_into(&self, subset: &[usize]) -> bool {
        self.values.iter().all(|v| subset.contains(v))
    }

    /// Unary only: bijective on its domain (image equals the domain as a set).
    pub fn is_permutation_of_domain(&self) -> bool {
        if self.arity != 1 {
            return false;
        }
        let mut img = self.values.clone();
        img.sort_unstable();
        img.dedup();
        let mut dom = self.domain.clone();
        dom.sort_unstable();
        img == dom
    }

    /// Serialization per the library's text conventions:
    /// a header `poly U=<elements> arity=<k>` followed by the entries.
    pub fn serialize(&self) -> String {
        let dom = self
            .domain
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let vals = self
            .values
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        format!("poly U={} arity={}\n{}\n", dom, self.arity, vals)
    }
}

fn table_from_width_vector(u: &[usize], arity: usize, vector: &[usize]) -> PolyTable {
    PolyTable::new(u.to_vec(), arity, vector.to_vec())
}

/// Closure computing the restricted clone, retained with provenance for
/// witness reconstruction. Generator order: the `k` projections first, then
/// the constant maps for `0..n`.
pub fn restricted_pol_closure<A: AlgebraOps + ?Sized>(
    alg: &A,
    u: &[usize],
    k: usize,
    cap: usize,
) -> Result<Closure> {
    let n = alg.size();
    let m = u.len();
    let width = m
        .checked_pow(k as u32)
        .filter(|&w| w <= cap)
        .ok_or_else(|| AlgError::cap("restricted clone index set", cap))?;
    let mut gens: Vec<Vec<usize>> = Vec::with_capacity(k + n);
    for j in 0..k {
        let mut proj = Vec::with_capacity(width);
        for idx in 0..width {
            proj.push(u[decode_tuple(idx, m, k)[j]]);
        }
        gens.push(proj);
    }
    for c in 0..n {
        gens.push(vec![c; width]);
    }
    generate_subuniverse(alg, width, &gens, cap)
}

/// The complete set of k-ary polynomial restrictions to `U`, as tables
/// `U^k -> A`, in canonical (lexicographic) order.
pub fn restricted_pol<A: AlgebraOps + ?Sized>(
    alg: &A,
    u: &[usize],
    k: usize,
    cap: usize,
) -> Result<Vec<PolyTable>> {
    let closure = restricted_pol_closure(alg, u, k, cap)?;
    Ok(closure
        .sorted_elements()
        .iter()
        .map(|vec| table_from_width_vector(u, k, vec))
        .collect())
}

/// The non-indexed algebra induced on `W`, materialized up to `arity_cap`:
/// its operations are all polynomial tables of arity `1..=arity_cap` mapping
/// `W^k` into `W`, renumbered onto `0..|W|-1`.
pub fn induced_algebra<A: AlgebraOps + ?Sized>(
    alg: &A,
    w: &[usize],
    arity_cap: usize,
    cap: usize,
) -> Result<FiniteAlgebra> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = sorted.len();
    let mut ops = Vec::new();
    for k in 1..=arity_cap {
        for (i, table) in restricted_pol(alg, &sorted, k, cap)?
            .into_iter()
            .filter(|t| t.maps_into(&sorted))
            .enumerate()
        {
            let renumbered: Vec<usize> = table.values.iter().map(|v| pos[v]).collect();
            ops.push(Operation::new(format!("p{}_{}", k, i), k, m, renumbered)?);
        }
    }
    FiniteAlgebra::new("induced", m, ops)
}

/// A group of unary polynomial tables on a common domain, with its
/// composition table, inverses, and identity.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub domain: Vec<usize>,
    pub elements: Vec<PolyTable>,
    pub composition: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl PermGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, t: &PolyTable) -> Option<usize> {
        self.elements.iter().position(|e| e == t)
    }

    fn from_tables(domain: Vec<usize>, elements: Vec<PolyTable>) -> Result<PermGroup> {
        let find = |t: &PolyTable, elements: &[PolyTable]| -> Result<usize> {
            elements.iter().position(|e| e == t).ok_or_else(|| {
                AlgError::Internal("polynomial permutations are not closed under composition".into())
            })
        };
        let mut composition = vec![vec![0usize; elements.len()]; elements.len()];
        for (i, f) in elements.iter().enumerate() {
            for (j, g) in elements.iter().enumerate() {
                composition[i][j] = find(&f.compose(g), &elements)?;
            }
        }
        let id_table = PolyTable::new(domain.clone(), 1, domain.clone());
        let identity = find(&id_table, &elements)?;
        let mut inverse = vec![usize::MAX; elements.len()];
        for i in 0..elements.len() {
            match (0..elements.len()).find(|&j| composition[i][j] == identity) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(AlgError::Internal(
                        "polynomial permutation without inverse".into(),
                    ))
                }
            }
        }
        Ok(PermGroup {
            domain,
            elements,
            composition,
            inverse,
            identity,
        })
    }
}

/// The group of permutations of `U` realized as unary polynomials: tables
/// with `f(U) = U`, verified closed under composition and inverse.
pub fn pol_perm_group<A: AlgebraOps + ?Sized>(
    alg: &A,
    u: &[usize],
    cap: usize,
) -> Result<PermGroup> {
    let mut sorted = u.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let perms: Vec<PolyTable> = restricted_pol(alg, &sorted, 1, cap)?
        .into_iter()
        .filter(|t| t.is_permutation_of_domain())
        .collect();
    PermGroup::from_tables(sorted, perms)
}

/// The theta-twins of the identity on `U`: permutations `f` of `U` that
/// arise together with the identity from one term whose parameter tuples are
/// congruent modulo `theta`. Computed by a pair-algebra closure: generate the
/// subuniverse of `(A x A)^U` from the doubled identity and all doubled
/// constants `(e, d)` with `(e, d)` in `theta`, then keep the pairs whose
/// first side is the identity and whose second side permutes `U`.
#[derive(Debug, Clone)]
pub struct TwinGroup {
    pub group: PermGroup,
    /// Indices of the twin elements inside the ambient `pol_perm_group`.
    pub parent_indices: Vec<usize>,
}

pub fn twin_group<A: AlgebraOps + ?Sized>(
    alg: &A,
    u: &[usize],
    theta: &Partition,
    cap: usize,
) -> Result<TwinGroup> {
    let n = alg.size();
    if theta.size() != n {
        return Err(AlgError::SizeMismatch(theta.size(), n));
    }
    let mut sorted = u.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let width = sorted.len();
    let pair = PairView::new(alg);
    let mut gens: Vec<Vec<usize>> = Vec::new();
    gens.push(sorted.iter().map(|&x| pair.encode(x, x)).collect());
    for e in 0..n {
        for d in 0..n {
            if theta.same(e, d) {
                gens.push(vec![pair.encode(e, d); width]);
            }
        }
    }
    let closure = generate_subuniverse(&pair, width, &gens, cap)?;

    let ambient = pol_perm_group(alg, &sorted, cap)?;
    let mut twins: Vec<PolyTable> = Vec::new();
    for el in closure.sorted_elements() {
        let first: Vec<usize> = el.iter().map(|&p| pair.decode(p).0).collect();
        if first != sorted {
            continue;
        }
        let second: Vec<usize> = el.iter().map(|&p| pair.decode(p).1).collect();
        let table = PolyTable::new(sorted.clone(), 1, second);
        if table.is_permutation_of_domain() && !twins.contains(&table) {
            twins.push(table);
        }
    }
    twins.sort();
    let parent_indices = twins
        .iter()
        .map(|t| {
            ambient.index_of(t).ok_or_else(|| {
                AlgError::Internal("twin permutation missing from the polynomial group".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::from_tables(sorted, twins)?;

    // twins form a normal subgroup of the polynomial permutation group
    for f in &ambient.elements {
        let f_inv = &ambient.elements[ambient.inverse[ambient.index_of(f).unwrap()]];
        for t in &group.elements {
            let conj = f.compose(&t.compose(f_inv));
            if group.index_of(&conj).is_none() {
                return Err(AlgError::Internal(
                    "twin group is not normal in the polynomial permutation group".into(),
                ));
            }
        }
    }
    Ok(TwinGroup {
        group,
        parent_indices,
    })
}

/// Orbit partition of `domain` positions under a set of unary tables.
pub fn orbits(group: &PermGroup) -> Vec<Vec<usize>> {
    let m = group.domain.len();
    let mut uf = crate::partition::UnionFind::new(m);
    let pos: HashMap<usize, usize> = group
        .domain
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    for f in &group.elements {
        for (i, &x) in group.domain.iter().enumerate() {
            uf.union(i, pos[&f.apply(&[x])]);
        }
    }
    let part = uf.into_partition();
    part.blocks()
        .into_iter()
        .map(|b| b.into_iter().map(|i| group.domain[i]).collect())
        .collect()
}

/// Convenience: all unary polynomial tables on the full universe.
pub fn unary_polynomials<A: AlgebraOps + ?Sized>(alg: &A, cap: usize) -> Result<Vec<PolyTable>> {
    let universe: Vec<usize> = (0..alg.size()).collect();
    restricted_pol(alg, &universe, 1, cap)
}

/// Encode a full-universe unary table as a plain vector for fast indexing.
pub fn unary_vector(t: &PolyTable) -> Vec<usize> {
    debug_assert!(t.arity == 1);
    let mut out = vec![0usize; t.domain.len()];
    for (i, &v) in t.values.iter().enumerate() {
        out[encode_tuple(&[i], t.domain.len())] = v;
    }
    out
}
