//! Fermionic and bosonic configurations, the Gale partial orders, order
//! ideals, cover relations, runner-ups, and the fermion/boson natural map.
//!
//! A configuration is stored as a multiplicity vector over `d` orbitals; the
//! sorted index tuple view is derived on demand so the two views cannot drift
//! apart.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Fermion,
    Boson,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistics::Fermion => write!(f, "fermion"),
            Statistics::Boson => write!(f, "boson"),
        }
    }
}

impl std::str::FromStr for Statistics {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fermion" | "fermions" | "f" => Ok(Statistics::Fermion),
            "boson" | "bosons" | "b" => Ok(Statistics::Boson),
            other => Err(Error::InvalidParams(format!(
                "unknown statistics `{other}` (expected fermion or boson)"
            ))),
        }
    }
}

/// Problem parameters: particle statistics, particle count `n`, orbital
/// count `d`, and lineup length `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub statistics: Statistics,
    /// Particle count N.
    pub n: u32,
    /// Orbital count d (dimension of the one-particle space).
    pub d: u32,
    /// Lineup length r (number of non-zero ensemble weights).
    pub r: u32,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

impl Params {
    pub fn new(statistics: Statistics, n: u32, d: u32, r: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams(
                "orbital count d must be positive".into(),
            ));
        }
        if statistics == Statistics::Fermion && n > d {
            return Err(Error::InvalidParams(format!(
                "fermions require N <= d, got N={n}, d={d}"
            )));
        }
        let p = Params {
            statistics,
            n,
            d,
            r,
        };
        if r == 0 {
            return Err(Error::InvalidParams(
                "lineup length r must be positive".into(),
            ));
        }
        if (r as u128) > p.ambient_count() {
            return Err(Error::LineupTooLong {
                r,
                d_total: p.ambient_count(),
            });
        }
        Ok(p)
    }

    /// Ambient configuration count D: C(d,N) for fermions, C(d+N-1,N) for bosons.
    pub fn ambient_count(&self) -> u128 {
        match self.statistics {
            Statistics::Fermion => binomial(self.d as u64, self.n as u64),
            Statistics::Boson => binomial((self.d + self.n - 1) as u64, self.n as u64),
        }
    }

    /// The Gale-minimum configuration: {1,...,N} for fermions, {1^N} for bosons.
    pub fn minimum(&self) -> Configuration {
        let mut mult = vec![0u32; self.d as usize];
        match self.statistics {
            Statistics::Fermion => {
                for slot in mult.iter_mut().take(self.n as usize) {
                    *slot = 1;
                }
            }
            Statistics::Boson => {
                if self.n > 0 {
                    mult[0] = self.n;
                }
            }
        }
        Configuration { mult }
    }

    /// All configurations, in Gale-compatible (sorted tuple lexicographic) order.
    pub fn all_configurations(&self) -> Vec<Configuration> {
        let mut out = Vec::new();
        let mut tuple = Vec::with_capacity(self.n as usize);
        self.enumerate_rec(&mut tuple, 1, &mut out);
        out
    }

    fn enumerate_rec(&self, tuple: &mut Vec<u32>, from: u32, out: &mut Vec<Configuration>) {
        if tuple.len() == self.n as usize {
            out.push(Configuration::from_sorted_tuple(tuple, self.d).expect("valid tuple"));
            return;
        }
        let next_min = match self.statistics {
            Statistics::Fermion => from,
            Statistics::Boson => from,
        };
        for i in next_min..=self.d {
            tuple.push(i);
            let succ = match self.statistics {
                Statistics::Fermion => i + 1,
                Statistics::Boson => i,
            };
            self.enumerate_rec(tuple, succ, out);
            tuple.pop();
        }
    }
}

/// An occupation pattern: multiplicity per orbital, summing to N.
/// Fermionic configurations have all multiplicities in {0,1}.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    mult: Vec<u32>,
}

impl Ord for Configuration {
    /// Lexicographic on the sorted index tuple (the Gale-compatible reading
    /// order used everywhere in this crate).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sorted_tuple()
            .cmp(&other.sorted_tuple())
            .then_with(|| self.mult.cmp(&other.mult))
    }
}

impl PartialOrd for Configuration {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Configuration {
    pub fn from_multiplicities(mult: Vec<u32>) -> Self {
        Configuration { mult }
    }

    /// Build from a weakly increasing index tuple (1-based orbital indices).
    pub fn from_sorted_tuple(tuple: &[u32], d: u32) -> Result<Self> {
        let mut mult = vec![0u32; d as usize];
        let mut prev = 0;
        for &i in tuple {
            if i < 1 || i > d {
                return Err(Error::InvalidParams(format!(
                    "index {i} out of range 1..={d}"
                )));
            }
            if i < prev {
                return Err(Error::InvalidParams("tuple must be sorted".into()));
            }
            prev = i;
            mult[i as usize - 1] += 1;
        }
        Ok(Configuration { mult })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn particle_count(&self) -> u32 {
        self.mult.iter().sum()
    }

    pub fn orbital_count(&self) -> u32 {
        self.mult.len() as u32
    }

    pub fn is_fermionic(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// Sorted index tuple (weakly increasing, with multiplicity).
    pub fn sorted_tuple(&self) -> Vec<u32> {
        let mut t = Vec::with_capacity(self.particle_count() as usize);
        for (i, &m) in self.mult.iter().enumerate() {
            for _ in 0..m {
                t.push(i as u32 + 1);
            }
        }
        t
    }

    /// Rank in the Gale poset: sum of tuple entries minus that of the minimum,
    /// plus one.
    pub fn gale_rank(&self, statistics: Statistics) -> u64 {
        let s: u64 = self.sorted_tuple().iter().map(|&x| x as u64).sum();
        let n = self.particle_count() as u64;
        let min_sum = match statistics {
            Statistics::Fermion => n * (n + 1) / 2,
            Statistics::Boson => n,
        };
        s - min_sum + 1
    }

    /// Parse a configuration string: comma-free digit strings such as "1246"
    /// or boson "1133" when every index fits in one digit, comma-separated
    /// tuples otherwise.
    pub fn parse(s: &str, params: &Params) -> Result<Self> {
        let tuple: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::BadConfiguration(s.into(), e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).ok_or_else(|| {
                        Error::BadConfiguration(s.into(), format!("bad digit `{c}`"))
                    })
                })
                .collect::<Result<_>>()?
        };
        if tuple.len() != params.n as usize {
            return Err(Error::BadConfiguration(
                s.into(),
                format!("expected {} indices, got {}", params.n, tuple.len()),
            ));
        }
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        if sorted != tuple {
            return Err(Error::BadConfiguration(
                s.into(),
                "indices must be sorted".into(),
            ));
        }
        if params.statistics == Statistics::Fermion {
            for w in tuple.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::BadConfiguration(
                        s.into(),
                        "fermionic indices must be distinct".into(),
                    ));
                }
            }
        }
        Configuration::from_sorted_tuple(&tuple, params.d)
            .map_err(|e| Error::BadConfiguration(s.into(), e.to_string()))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple = self.sorted_tuple();
        if tuple.iter().all(|&i| i <= 9) {
            for i in tuple {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = tuple.iter().map(|i| i.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_same_shape(a: &Configuration, b: &Configuration) -> Result<()> {
    if a.mult.len() != b.mult.len() || a.particle_count() != b.particle_count() {
        return Err(Error::MismatchedParams(format!(
            "configurations {a} and {b} live in different posets"
        )));
    }
    Ok(())
}

/// Gale order: `a <= b` iff the k-th smallest index of `a` is at most the
/// k-th smallest index of `b`, for every k.
pub fn gale_leq(a: &Configuration, b: &Configuration) -> Result<bool> {
    check_same_shape(a, b)?;
    let (s, t) = (a.sorted_tuple(), b.sorted_tuple());
    Ok(s.iter().zip(t.iter()).all(|(x, y)| x <= y))
}

/// All lower covers: decrement one sorted-tuple entry by one, staying a valid
/// tuple for the given statistics.
pub fn lower_covers(c: &Configuration, statistics: Statistics) -> Vec<Configuration> {
    let tuple = c.sorted_tuple();
    let d = c.orbital_count();
    let mut out = Vec::new();
    for k in 0..tuple.len() {
        let cand = tuple[k] as i64 - 1;
        if cand < 1 {
            continue;
        }
        let ok = match statistics {
            Statistics::Fermion => k == 0 || (tuple[k - 1] as i64) < cand,
            Statistics::Boson => k == 0 || (tuple[k - 1] as i64) <= cand,
        };
        if ok {
            let mut t = tuple.clone();
            t[k] -= 1;
            out.push(Configuration::from_sorted_tuple(&t, d).expect("valid"));
        }
    }
    out
}

/// All upper covers: increment one sorted-tuple entry by one.
pub fn upper_covers(c: &Configuration, statistics: Statistics) -> Vec<Configuration> {
    let tuple = c.sorted_tuple();
    let d = c.orbital_count();
    let mut out = Vec::new();
    for k in 0..tuple.len() {
        let cand = tuple[k] + 1;
        if cand > d {
            continue;
        }
        let ok = match statistics {
            Statistics::Fermion => k + 1 == tuple.len() || tuple[k + 1] > cand,
            Statistics::Boson => k + 1 == tuple.len() || tuple[k + 1] >= cand,
        };
        if ok {
            let mut t = tuple.clone();
            t[k] += 1;
            out.push(Configuration::from_sorted_tuple(&t, d).expect("valid"));
        }
    }
    out
}

/// An order ideal of the Gale poset, remembering the insertion order used to
/// build it (the lineup semantics of the engine depend on it).
#[derive(Clone, Debug)]
pub struct GaleIdeal {
    params: Params,
    members: HashSet<Configuration>,
    order: Vec<Configuration>,
}

impl GaleIdeal {
    pub fn empty(params: Params) -> Self {
        GaleIdeal {
            params,
            members: HashSet::new(),
            order: Vec::new(),
        }
    }

    /// Downward closure of a set of generators.
    pub fn generated_by(params: Params, generators: &[Configuration]) -> Result<Self> {
        let mut ideal = GaleIdeal::empty(params);
        let mut stack: Vec<Configuration> = generators.to_vec();
        for g in generators {
            if g.orbital_count() != params.d || g.particle_count() != params.n {
                return Err(Error::MismatchedParams(format!(
                    "generator {g} does not match params"
                )));
            }
            if params.statistics == Statistics::Fermion && !g.is_fermionic() {
                return Err(Error::NotFermionic(g.to_string()));
            }
        }
        while let Some(c) = stack.pop() {
            if ideal.members.contains(&c) {
                continue;
            }
            for low in lower_covers(&c, params.statistics) {
                if !ideal.members.contains(&low) {
                    stack.push(low);
                }
            }
            ideal.members.insert(c.clone());
            ideal.order.push(c);
        }
        ideal.order.sort();
        Ok(ideal)
    }

    /// Build from an explicit insertion order, checking the ideal property at
    /// every prefix.
    pub fn from_order(params: Params, order: Vec<Configuration>) -> Result<Self> {
        let mut ideal = GaleIdeal::empty(params);
        for c in order {
            if !ideal.accepts(&c) {
                return Err(Error::InvalidParams(format!(
                    "adding {c} would break the ideal property"
                )));
            }
            ideal.insert_unchecked(c);
        }
        Ok(ideal)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.members.contains(c)
    }

    pub fn members(&self) -> impl Iterator<Item = &Configuration> {
        self.order.iter()
    }

    /// Insertion order (the lineup sequence when built by the engine).
    pub fn insertion_order(&self) -> &[Configuration] {
        &self.order
    }

    /// Would `ideal ∪ {c}` still be downward closed?
    pub fn accepts(&self, c: &Configuration) -> bool {
        !self.members.contains(c)
            && lower_covers(c, self.params.statistics)
                .iter()
                .all(|low| self.members.contains(low))
    }

    pub(crate) fn insert_unchecked(&mut self, c: Configuration) {
        self.members.insert(c.clone());
        self.order.push(c);
    }

    /// Verify downward closure of the member set.
    pub fn is_valid(&self) -> bool {
        self.members.iter().all(|c| {
            lower_covers(c, self.params.statistics)
                .iter()
                .all(|low| self.members.contains(low))
        })
    }
}

/// All configurations T outside the ideal such that `ideal ∪ {T}` is still an
/// ideal. The empty ideal has the poset minimum as its unique runner-up.
pub fn runner_ups(ideal: &GaleIdeal) -> Vec<Configuration> {
    let params = ideal.params();
    if ideal.is_empty() {
        return vec![params.minimum()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in ideal.members() {
        for up in upper_covers(m, params.statistics) {
            if seen.insert(up.clone()) && ideal.accepts(&up) {
                out.push(up);
            }
        }
    }
    out.sort();
    out
}

/// The order isomorphism from the fermionic poset on (N,d) to the bosonic
/// poset on (N, d-N+1): the sorted tuple (s_1, s_2-1, ..., s_N-N+1).
pub fn natural_map(c: &Configuration) -> Result<Configuration> {
    if !c.is_fermionic() {
        return Err(Error::NotFermionic(c.to_string()));
    }
    let tuple = c.sorted_tuple();
    let n = tuple.len() as u32;
    let d = c.orbital_count();
    let mapped: Vec<u32> = tuple
        .iter()
        .enumerate()
        .map(|(k, &s)| s - k as u32)
        .collect();
    Configuration::from_sorted_tuple(&mapped, d - n + 1)
}

/// Inverse of [`natural_map`]: bosonic (N, d) back to fermionic (N, d+N-1).
pub fn natural_map_inverse(c: &Configuration) -> Configuration {
    let tuple = c.sorted_tuple();
    let n = tuple.len() as u32;
    let d = c.orbital_count();
    let mapped: Vec<u32> = tuple
        .iter()
        .enumerate()
        .map(|(k, &s)| s + k as u32)
        .collect();
    Configuration::from_sorted_tuple(&mapped, d + n - 1).expect("strictly increasing")
}
