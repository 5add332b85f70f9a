//! Finite groups backed by dense Cayley tables.
//!
//! Elements are the ids `0..order`. Every constructor documents its
//! enumeration order so that ids are stable across runs:
//!
//! * cyclic `Z_k`: id `i` is the residue `i`.
//! * dihedral `D_k`: id `i < k` is the rotation `r^i`, id `k + i` is `r^i F`.
//! * symmetric / alternating: permutations of `0..m` in lexicographic order
//!   of their one-line notation; the product `στ` applies `τ` first.
//! * direct powers: the tuple `(g_0, …, g_{n-1})` has id
//!   `Σ g_i · |G|^{n-1-i}` (first coordinate most significant).

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the order of a materialised Cayley table.
pub const DEFAULT_MAX_ORDER: u64 = 4096;

/// Orders up to this size are checked for associativity exhaustively.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupLimits {
    pub max_order: u64,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl GroupLimits {
    pub fn check(&self, order: u64) -> Result<()> {
        if order > self.max_order {
            Err(Error::GuardExceeded {
                order,
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

/// Which constructor produced a group. Used to pick explicit irrep
/// constructions where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup, stored as the sorted list of its element ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Clone, Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// JSON exchange format for a group: row-major multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub name: String,
    pub order: usize,
    pub mul_table: Vec<u32>,
    pub identity_id: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    family: GroupFamily,
    class_data: OnceLock<ClassData>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking every group axiom.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        identity: usize,
        limits: &GroupLimits,
    ) -> Result<Self> {
        limits.check(order as u64)?;
        if order == 0 {
            return Err(Error::MalformedGroup("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::MalformedGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if identity >= order {
            return Err(Error::MalformedGroup(format!(
                "identity id {identity} out of range"
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x as usize >= order) {
            return Err(Error::MalformedGroup(format!("entry {bad} out of range")));
        }
        for g in 0..order {
            if table[identity * order + g] as usize != g || table[g * order + identity] as usize != g
            {
                return Err(Error::MalformedGroup(format!(
                    "{identity} is not a two-sided identity (fails at {g})"
                )));
            }
        }
        let inverses = compute_inverses(order, &table, identity)?;
        let group = FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
            family: GroupFamily::Custom,
            class_data: OnceLock::new(),
        };
        if !group.is_associative() {
            return Err(Error::MalformedGroup("operation is not associative".into()));
        }
        Ok(group)
    }

    /// Trusted constructor for tables produced by this crate.
    pub(crate) fn from_trusted_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        identity: usize,
        family: GroupFamily,
    ) -> Self {
        let inverses =
            compute_inverses(order, &table, identity).expect("constructor produced a non-group");
        FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
            family,
            class_data: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn family(&self) -> &GroupFamily {
        &self.family
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x g x⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Exhaustive for small orders, 20 000 sampled triples above that.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = self.mul(a, b);
                    (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
                })
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a55c);
            (0..20_000).all(|_| {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn class_data(&self) -> &ClassData {
        self.class_data.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut classes: Vec<ConjugacyClass> = Vec::new();
            // identity class first, then in order of smallest member id
            let seeds = std::iter::once(self.identity).chain((0..n).filter(|&g| g != self.identity));
            for g in seeds {
                if class_of[g] != u32::MAX {
                    continue;
                }
                let idx = classes.len() as u32;
                let mut members = Vec::new();
                for x in 0..n {
                    let c = self.conjugate(g, x);
                    if class_of[c] == u32::MAX {
                        class_of[c] = idx;
                        members.push(c);
                    }
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: members[0],
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes; the identity class comes first, the rest are
    /// ordered by their smallest member id (which is also the representative).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_data().class_of[g] as usize
    }

    pub fn class_index_table(&self) -> &[u32] {
        &self.class_data().class_of
    }

    pub fn num_classes(&self) -> usize {
        self.conjugacy_classes().len()
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.conjugacy_classes()[self.class_of(g)].size() == 1
    }

    pub fn center(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order).filter(|&g| self.is_central(g)).collect(),
        }
    }

    pub fn is_involution(&self, g: usize) -> bool {
        g != self.identity && self.mul(g, g) == self.identity
    }

    /// Elements of order exactly two.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order).filter(|&g| self.is_involution(g)).collect()
    }

    pub fn centralizer_size(&self, g: usize) -> usize {
        (0..self.order)
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .count()
    }

    /// Smallest non-central involution, the deterministic default for μ.
    pub fn default_involution(&self) -> Option<usize> {
        (0..self.order).find(|&g| self.is_involution(g) && !self.is_central(g))
    }

    pub fn subgroup(&self, ids: &[usize]) -> Result<Subgroup> {
        let mut members: Vec<usize> = ids.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&g| g >= self.order) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        let sub = Subgroup { members };
        if !sub.contains(self.identity) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in sub.members() {
            if !sub.contains(self.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in sub.members() {
                if !sub.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a}·{b} not contained")));
                }
            }
        }
        Ok(sub)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order).collect(),
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            members: (0..self.order).filter(|&g| seen[g]).collect(),
        }
    }

    /// Simple iff the normal closure of every non-identity class is the
    /// whole group.
    pub fn is_simple(&self) -> bool {
        if self.order == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .skip(1)
            .all(|c| self.generated_subgroup(&c.members).order() == self.order)
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            name: self.name.clone(),
            order: self.order,
            mul_table: self.table.clone(),
            identity_id: self.identity,
        }
    }

    pub fn from_document(doc: GroupDocument, limits: &GroupLimits) -> Result<Self> {
        FiniteGroup::from_table(doc.name, doc.order, doc.mul_table, doc.identity_id, limits)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_document())?)
    }

    pub fn from_json(s: &str, limits: &GroupLimits) -> Result<Self> {
        FiniteGroup::from_document(serde_json::from_str(s)?, limits)
    }
}

fn compute_inverses(order: usize, table: &[u32], identity: usize) -> Result<Vec<u32>> {
    let mut inverses = vec![u32::MAX; order];
    for a in 0..order {
        let row = &table[a * order..(a + 1) * order];
        let b = row
            .iter()
            .position(|&x| x as usize == identity)
            .ok_or_else(|| Error::MalformedGroup(format!("element {a} has no inverse")))?;
        if table[b * order + a] as usize != identity {
            return Err(Error::MalformedGroup(format!(
                "element {a} has no two-sided inverse"
            )));
        }
        inverses[a] = b as u32;
    }
    Ok(inverses)
}

pub fn make_cyclic(k: usize) -> Result<FiniteGroup> {
    make_cyclic_with_limits(k, &GroupLimits::default())
}

pub fn make_cyclic_with_limits(k: usize, limits: &GroupLimits) -> Result<FiniteGroup> {
    if k == 0 {
        return Err(Error::InvalidArgument("cyclic group needs k ≥ 1".into()));
    }
    limits.check(k as u64)?;
    let table = (0..k)
        .flat_map(|a| (0..k).map(move |b| ((a + b) % k) as u32))
        .collect();
    Ok(FiniteGroup::from_trusted_table(
        format!("Z{k}"),
        k,
        table,
        0,
        GroupFamily::Cyclic(k),
    ))
}

/// Dihedral group of order `2k`; the flip `F` has id `k`.
pub fn make_dihedral(k: usize) -> Result<FiniteGroup> {
    make_dihedral_with_limits(k, &GroupLimits::default())
}

pub fn make_dihedral_with_limits(k: usize, limits: &GroupLimits) -> Result<FiniteGroup> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "dihedral group needs k ≥ 3, got {k}"
        )));
    }
    let order = 2 * k;
    limits.check(order as u64)?;
    let mut table = Vec::with_capacity(order * order);
    for g in 0..order {
        let (x, a) = (g / k, g % k);
        for h in 0..order {
            let (y, b) = (h / k, h % k);
            // r^a F^x · r^b F^y = r^{a ± b} F^{x+y}
            let rot = if x == 0 { (a + b) % k } else { (a + k - b) % k };
            table.push((((x + y) % 2) * k + rot) as u32);
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("D{k}"),
        order,
        table,
        0,
        GroupFamily::Dihedral(k),
    ))
}

/// Id of the designated flip `F` of `make_dihedral(k)`.
pub fn dihedral_flip(k: usize) -> usize {
    k
}

const MAX_PERMUTATION_DEGREE: usize = 8;

pub fn make_symmetric(m: usize) -> Result<FiniteGroup> {
    make_symmetric_with_limits(m, &GroupLimits::default())
}

pub fn make_symmetric_with_limits(m: usize, limits: &GroupLimits) -> Result<FiniteGroup> {
    let perms = permutations(m, false, limits)?;
    Ok(permutation_group(format!("S{m}"), perms, GroupFamily::Symmetric(m)))
}

pub fn make_alternating(m: usize) -> Result<FiniteGroup> {
    make_alternating_with_limits(m, &GroupLimits::default())
}

pub fn make_alternating_with_limits(m: usize, limits: &GroupLimits) -> Result<FiniteGroup> {
    let perms = permutations(m, true, limits)?;
    Ok(permutation_group(format!("A{m}"), perms, GroupFamily::Alternating(m)))
}

fn permutations(m: usize, even_only: bool, limits: &GroupLimits) -> Result<Vec<Vec<u8>>> {
    if m == 0 || m > MAX_PERMUTATION_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "permutation degree must be in 1..={MAX_PERMUTATION_DEGREE}, got {m}"
        )));
    }
    let full: u64 = (1..=m as u64).product();
    let order = if even_only && m > 1 { full / 2 } else { full };
    limits.check(order)?;
    Ok((0..m as u8)
        .permutations(m)
        .filter(|p| !even_only || is_even(p))
        .collect())
}

fn is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn permutation_group(name: String, perms: Vec<Vec<u8>>, family: GroupFamily) -> FiniteGroup {
    let order = perms.len();
    let index: HashMap<&[u8], u32> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i as u32))
        .collect();
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0u8; perms[0].len()];
    for s in &perms {
        for t in &perms {
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = s[t[i] as usize];
            }
            table.push(index[buf.as_slice()]);
        }
    }
    // lexicographic order puts the identity first
    FiniteGroup::from_trusted_table(name, order, table, 0, family)
}

/// The permutation (one-line notation) behind an element id of
/// `make_symmetric(m)` / `make_alternating(m)`.
pub fn permutation_of(m: usize, even_only: bool, id: usize) -> Option<Vec<u8>> {
    (0..m as u8)
        .permutations(m)
        .filter(|p| !even_only || is_even(p))
        .nth(id)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, limits: &GroupLimits) -> Result<FiniteGroup> {
    let order = (g.order() as u64)
        .checked_mul(h.order() as u64)
        .ok_or(Error::GuardExceeded {
            order: u64::MAX,
            limit: limits.max_order,
        })?;
    limits.check(order)?;
    let nh = h.order();
    let order = order as usize;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / nh, a % nh);
        for b in 0..order {
            let (b1, b2) = (b / nh, b % nh);
            table.push((g.mul(a1, b1) * nh + h.mul(a2, b2)) as u32);
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("{}x{}", g.name(), h.name()),
        order,
        table,
        g.identity() * nh + h.identity(),
        GroupFamily::Custom,
    ))
}

pub fn direct_power(g: &FiniteGroup, n: usize) -> Result<FiniteGroup> {
    direct_power_with_limits(g, n, &GroupLimits::default())
}

pub fn direct_power_with_limits(g: &FiniteGroup, n: usize, limits: &GroupLimits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("direct power needs n ≥ 1".into()));
    }
    let order = (g.order() as u64)
        .checked_pow(n as u32)
        .ok_or(Error::GuardExceeded {
            order: u64::MAX,
            limit: limits.max_order,
        })?;
    limits.check(order)?;
    let order = order as usize;
    let base = g.order();
    let digits = |mut x: usize| {
        let mut d = vec![0usize; n];
        for slot in d.iter_mut().rev() {
            *slot = x % base;
            x /= base;
        }
        d
    };
    let decoded: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = Vec::with_capacity(order * order);
    for a in &decoded {
        for b in &decoded {
            let id = a
                .iter()
                .zip(b)
                .fold(0usize, |acc, (&x, &y)| acc * base + g.mul(x, y));
            table.push(id as u32);
        }
    }
    let identity = (0..n).fold(0usize, |acc, _| acc * base + g.identity());
    Ok(FiniteGroup::from_trusted_table(
        format!("{}^{n}", g.name()),
        order,
        table,
        identity,
        GroupFamily::Custom,
    ))
}

/// Id of the tuple `coords` in `direct_power(g, coords.len())`.
pub fn power_element_id(base_order: usize, coords: &[usize]) -> usize {
    coords.iter().fold(0, |acc, &c| acc * base_order + c)
}
