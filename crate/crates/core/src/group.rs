//! Finite groups as Cayley tables.
//!
//! Elements are dense indices `0..order`, with index `0` always the identity;
//! this is what lets the set calculus use flat bitmasks. Groups are immutable
//! after construction and every constructor runs the same validation: Latin
//! square rows and columns, identity and inverse laws, and associativity —
//! exhaustive for order ≤ 64, by 10⁵ seeded random triples above that (table
//! files are untrusted input, so even the built-in families pay the check).

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::rational::{rat_counts, Rat};
use crate::rng::XorShift64Star;
use crate::sets::ElementSet;

/// Default ceiling on group order; also bounds `u16` table entries.
pub const DEFAULT_ORDER_CAP: usize = 10_080;

/// Exhaustive associativity checking is done up to this order.
const FULL_ASSOC_ORDER: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;
const ASSOC_SAMPLE_SEED: u64 = 0x5DEE_CE66_D1CE_5EED;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("group order {order} exceeds cap {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("invalid Cayley table: {0}")]
    Table(String),
    #[error("element {0} out of range for group of order {1}")]
    BadElement(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A constructive description of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Psl2(u32),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    TableFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Psl2(p) => write!(f, "psl2:{p}"),
            GroupSpec::Product(a, b) => write!(f, "{a}*{b}"),
            GroupSpec::TableFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GroupSpec {
    /// Parses specs of the form `cyclic:6`, `dihedral:4`, `sym:3`, `psl2:5`,
    /// `file:path`, and `*`-joined direct products of those.
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(GroupError::InvalidSpec("empty spec".into()));
        }
        // `file:` paths may contain `*`, so handle them before splitting.
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GroupSpec::TableFile(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.split('*').collect();
        if parts.len() > 1 {
            let mut spec = Self::parse_atom(parts[0])?;
            for part in &parts[1..] {
                spec = GroupSpec::Product(Box::new(spec), Box::new(Self::parse_atom(part)?));
            }
            return Ok(spec);
        }
        Self::parse_atom(s)
    }

    fn parse_atom(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GroupSpec::TableFile(PathBuf::from(path)));
        }
        let (family, arg) = s
            .split_once(':')
            .ok_or_else(|| GroupError::InvalidSpec(format!("missing ':' in `{s}`")))?;
        let n: u32 = arg
            .parse()
            .map_err(|_| GroupError::InvalidSpec(format!("bad parameter in `{s}`")))?;
        match family {
            "cyclic" | "z" => Ok(GroupSpec::Cyclic(n)),
            "dihedral" | "dih" => Ok(GroupSpec::Dihedral(n)),
            "sym" | "symmetric" => Ok(GroupSpec::Symmetric(n)),
            "psl2" => Ok(GroupSpec::Psl2(n)),
            other => Err(GroupError::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        let cap = cap.min(u16::MAX as usize);
        let order = self.order()?;
        if order > cap as u128 {
            return Err(GroupError::OrderCap { order, cap });
        }
        let g = match self {
            GroupSpec::Cyclic(n) => build_cyclic(*n)?,
            GroupSpec::Dihedral(n) => build_dihedral(*n)?,
            GroupSpec::Symmetric(n) => build_symmetric(*n)?,
            GroupSpec::Psl2(p) => build_psl2(*p)?,
            GroupSpec::Product(a, b) => {
                let left = a.build_with_cap(cap)?;
                let right = b.build_with_cap(cap)?;
                build_product(&left, &right, self.to_string())?
            }
            GroupSpec::TableFile(path) => FiniteGroup::from_table_file(path)?,
        };
        Ok(g)
    }

    /// Order of the resulting group, without building it.
    pub fn order(&self) -> Result<u128, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    Err(GroupError::InvalidSpec("cyclic:0".into()))
                } else {
                    Ok(*n as u128)
                }
            }
            GroupSpec::Dihedral(n) => {
                if *n == 0 {
                    Err(GroupError::InvalidSpec("dihedral:0".into()))
                } else {
                    Ok(2 * *n as u128)
                }
            }
            GroupSpec::Symmetric(n) => {
                if *n == 0 || *n > 8 {
                    return Err(GroupError::InvalidSpec(format!(
                        "sym:{n} unsupported (need 1 ≤ n ≤ 8)"
                    )));
                }
                Ok((1..=*n as u128).product())
            }
            GroupSpec::Psl2(p) => {
                if !is_prime(*p) {
                    return Err(GroupError::InvalidSpec(format!("psl2:{p}: p must be prime")));
                }
                let p = *p as u128;
                let sl = p * (p * p - 1);
                Ok(if p == 2 { sl } else { sl / 2 })
            }
            GroupSpec::Product(a, b) => Ok(a.order()?.saturating_mul(b.order()?)),
            GroupSpec::TableFile(path) => {
                // Only the header is needed for the order.
                let text = std::fs::read_to_string(path)?;
                let first = text.lines().next().unwrap_or("");
                let mut it = first.split_whitespace();
                match (it.next(), it.next()) {
                    (Some("order"), Some(n)) => n
                        .parse::<u128>()
                        .map_err(|_| GroupError::Table("bad order header".into())),
                    _ => Err(GroupError::Table("missing `order n` header".into())),
                }
            }
        }
    }
}

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major products: `table[g * order + h] = g · h`.
    table: Vec<u16>,
    names: Vec<String>,
    inverse: Vec<u16>,
    label: String,
}

impl FiniteGroup {
    /// Builds a group from raw data and validates every invariant.
    pub fn from_table(
        table: Vec<u16>,
        names: Vec<String>,
        label: String,
    ) -> Result<Self, GroupError> {
        let order = names.len();
        if order == 0 {
            return Err(GroupError::Table("empty group".into()));
        }
        if order > u16::MAX as usize {
            return Err(GroupError::OrderCap {
                order: order as u128,
                cap: u16::MAX as usize,
            });
        }
        if table.len() != order * order {
            return Err(GroupError::Table(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        let inverse = compute_inverses(&table, order)?;
        let g = Self {
            order,
            table,
            names,
            inverse,
            label,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Left-to-right product of a sequence of elements; empty product is the
    /// identity.
    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &e| self.mul(acc, e))
    }

    pub fn commutes(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.commutes(g, h)))
    }

    /// `{h : gh = hg}`; always a subgroup containing the identity and `g`.
    pub fn centralizer(&self, g: usize) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        for h in 0..self.order {
            if self.commutes(g, h) {
                set.insert(h);
            }
        }
        set
    }

    /// Minimum over non-identity `g` of `|G| / |C(g)|`; exactly 1 iff the
    /// group is abelian. The trivial group is abelian, so it reports 1.
    pub fn min_centralizer_index(&self) -> Rat {
        let mut best: Option<Rat> = None;
        for g in 1..self.order {
            let c = self.centralizer(g).card();
            let idx = rat_counts(self.order as u128, c as u128);
            best = Some(match best {
                None => idx,
                Some(b) => {
                    if idx < b {
                        idx
                    } else {
                        b
                    }
                }
            });
        }
        best.unwrap_or_else(|| rat_counts(1, 1))
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        // Unique, whitespace-free names.
        {
            let mut seen = HashMap::new();
            for (i, name) in self.names.iter().enumerate() {
                if name.is_empty() || name.chars().any(|c| c.is_whitespace()) {
                    return Err(GroupError::Table(format!(
                        "name `{name}` (element {i}) is empty or contains whitespace"
                    )));
                }
                if let Some(j) = seen.insert(name.clone(), i) {
                    return Err(GroupError::Table(format!(
                        "duplicate name `{name}` at elements {j} and {i}"
                    )));
                }
            }
        }
        // Identity at index 0.
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::Table(format!(
                    "element 0 is not a two-sided identity at {g}"
                )));
            }
        }
        // Latin square rows and columns.
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let v = self.mul(g, h);
                if v >= n {
                    return Err(GroupError::Table(format!("entry {g}·{h} out of range")));
                }
                if seen[v] {
                    return Err(GroupError::Table(format!("row {g} is not a bijection")));
                }
                seen[v] = true;
            }
        }
        for h in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for g in 0..n {
                let v = self.mul(g, h);
                if seen[v] {
                    return Err(GroupError::Table(format!("column {h} is not a bijection")));
                }
                seen[v] = true;
            }
        }
        // Inverses.
        for g in 0..n {
            let i = self.inv(g);
            if self.mul(g, i) != 0 || self.mul(i, g) != 0 {
                return Err(GroupError::Table(format!("inverse law fails at {g}")));
            }
        }
        // Associativity: full below the threshold, seeded sampling above.
        if n <= FULL_ASSOC_ORDER {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::Table(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = XorShift64Star::new(ASSOC_SAMPLE_SEED ^ n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.gen_range(n as u64) as usize;
                let b = rng.gen_range(n as u64) as usize;
                let c = rng.gen_range(n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupError::Table(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Renders the Cayley table text format: `order n`, a line of names,
    /// then `n` rows of `n` product indices.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order {}\n", self.order));
        out.push_str(&self.names.join(" "));
        out.push('\n');
        for g in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|h| self.mul(g, h).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_table_str(text: &str, label: String) -> Result<Self, GroupError> {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("order") => {}
            _ => return Err(GroupError::Table("missing `order n` header".into())),
        }
        let order: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GroupError::Table("bad order header".into()))?;
        if order == 0 {
            return Err(GroupError::Table("order must be positive".into()));
        }
        let mut names = Vec::with_capacity(order);
        for _ in 0..order {
            let name = tokens
                .next()
                .ok_or_else(|| GroupError::Table("missing element names".into()))?;
            names.push(name.to_string());
        }
        let mut table = Vec::with_capacity(order * order);
        for _ in 0..order * order {
            let v: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GroupError::Table("missing or non-numeric table entry".into()))?;
            if v >= order {
                return Err(GroupError::Table(format!("table entry {v} out of range")));
            }
            table.push(v as u16);
        }
        if tokens.next().is_some() {
            return Err(GroupError::Table("trailing tokens after table".into()));
        }
        Self::from_table(table, names, label)
    }

    pub fn from_table_file(path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_table_str(&text, format!("file:{}", path.display()))
    }
}

fn compute_inverses(table: &[u16], order: usize) -> Result<Vec<u16>, GroupError> {
    let mut inverse = vec![u16::MAX; order];
    for g in 0..order {
        let mut found = None;
        for h in 0..order {
            if table[g * order + h] == 0 {
                if found.is_some() {
                    return Err(GroupError::Table(format!("element {g} has two inverses")));
                }
                found = Some(h as u16);
            }
        }
        inverse[g] = found.ok_or_else(|| GroupError::Table(format!("element {g} has no inverse")))?;
    }
    Ok(inverse)
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn build_cyclic(n: u32) -> Result<FiniteGroup, GroupError> {
    let n = n as usize;
    let mut table = vec![0u16; n * n];
    for g in 0..n {
        for h in 0..n {
            table[g * n + h] = ((g + h) % n) as u16;
        }
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_table(table, names, format!("cyclic:{n}"))
}

fn build_dihedral(n: u32) -> Result<FiniteGroup, GroupError> {
    let n = n as usize;
    let order = 2 * n;
    // Element (a, i) = s^a r^i at index a·n + i; (a,i)·(b,j) = (a⊕b, j ± i).
    let idx = |a: usize, i: usize| a * n + i;
    let mut table = vec![0u16; order * order];
    for a in 0..2 {
        for i in 0..n {
            for b in 0..2 {
                for j in 0..n {
                    let rot = if b == 0 { (i + j) % n } else { (n + j - i) % n };
                    table[idx(a, i) * order + idx(b, j)] = idx(a ^ b, rot) as u16;
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for a in 0..2 {
        for i in 0..n {
            names.push(match (a, i) {
                (0, 0) => "e".to_string(),
                (0, i) => format!("r{i}"),
                (1, 0) => "s".to_string(),
                (_, i) => format!("sr{i}"),
            });
        }
    }
    FiniteGroup::from_table(table, names, format!("dihedral:{n}"))
}

fn permutations_lex(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Canonical cycle notation: cycles start at their smallest element, ordered
/// by that element, fixed points omitted; the identity is `()`.
fn cycle_name(perm: &[u8]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut cur = start;
        loop {
            seen[cur] = true;
            out.push_str(&cur.to_string());
            cur = perm[cur] as usize;
            if cur == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn build_symmetric(n: u32) -> Result<FiniteGroup, GroupError> {
    let n = n as usize;
    let perms = permutations_lex(n);
    let order = perms.len();
    let mut index = HashMap::with_capacity(order);
    for (i, p) in perms.iter().enumerate() {
        index.insert(p.clone(), i);
    }
    // Product applies the left factor first: (g·h)(x) = h(g(x)).
    let mut table = vec![0u16; order * order];
    let mut buf = vec![0u8; n];
    for (gi, g) in perms.iter().enumerate() {
        for (hi, h) in perms.iter().enumerate() {
            for x in 0..n {
                buf[x] = h[g[x] as usize];
            }
            table[gi * order + hi] = index[&buf] as u16;
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    FiniteGroup::from_table(table, names, format!("sym:{n}"))
}

type Mat = (u32, u32, u32, u32);

fn build_psl2(p: u32) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidSpec(format!("psl2:{p}: p must be prime")));
    }
    let m = p as u64;
    let neg = |m_: Mat| -> Mat {
        (
            ((p - m_.0 % p) % p),
            ((p - m_.1 % p) % p),
            ((p - m_.2 % p) % p),
            ((p - m_.3 % p) % p),
        )
    };
    // Representative of {M, −M}: the lexicographically smaller tuple.
    let canon = |m_: Mat| -> Mat { m_.min(neg(m_)) };
    let mut reps: Vec<Mat> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = (a as u64 * d as u64 + m * m - b as u64 * c as u64) % m;
                    if det == 1 {
                        let mat = (a, b, c, d);
                        if canon(mat) == mat {
                            reps.push(mat);
                        }
                    }
                }
            }
        }
    }
    reps.sort_unstable();
    // Identity first, remaining representatives in lexicographic order.
    let id = canon((1, 0, 0, 1));
    let pos = reps
        .iter()
        .position(|&r| r == id)
        .ok_or_else(|| GroupError::Table("identity missing from PSL(2,p) enumeration".into()))?;
    reps.swap(0, pos);
    reps[1..].sort_unstable();

    let order = reps.len();
    let mut index = HashMap::with_capacity(order);
    for (i, &r) in reps.iter().enumerate() {
        index.insert(r, i);
    }
    let mut table = vec![0u16; order * order];
    for (gi, &(a, b, c, d)) in reps.iter().enumerate() {
        for (hi, &(e, f, g_, h)) in reps.iter().enumerate() {
            let prod = (
                ((a as u64 * e as u64 + b as u64 * g_ as u64) % m) as u32,
                ((a as u64 * f as u64 + b as u64 * h as u64) % m) as u32,
                ((c as u64 * e as u64 + d as u64 * g_ as u64) % m) as u32,
                ((c as u64 * f as u64 + d as u64 * h as u64) % m) as u32,
            );
            table[gi * order + hi] = index[&canon(prod)] as u16;
        }
    }
    let names = reps
        .iter()
        .map(|&(a, b, c, d)| format!("{a},{b},{c},{d}"))
        .collect();
    FiniteGroup::from_table(table, names, format!("psl2:{p}"))
}

fn build_product(
    left: &FiniteGroup,
    right: &FiniteGroup,
    label: String,
) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (left.order(), right.order());
    let order = na * nb;
    let mut table = vec![0u16; order * order];
    for a1 in 0..na {
        for b1 in 0..nb {
            let g = a1 * nb + b1;
            for a2 in 0..na {
                for b2 in 0..nb {
                    let h = a2 * nb + b2;
                    table[g * order + h] = (left.mul(a1, a2) * nb + right.mul(b1, b2)) as u16;
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for a in 0..na {
        for b in 0..nb {
            names.push(format!("({},{})", left.name(a), right.name(b)));
        }
    }
    FiniteGroup::from_table(table, names, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn build(spec: &str) -> FiniteGroup {
        GroupSpec::parse(spec).unwrap().build().unwrap()
    }

    #[test]
    fn cyclic_6_is_abelian() {
        let g = build("cyclic:6");
        assert_eq!(g.order(), 6);
        // brute force over all 36 pairs
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.mul(a, b), g.mul(b, a));
            }
        }
        assert!(g.is_abelian());
    }

    #[test]
    fn sym_3_is_nonabelian_of_order_6() {
        let g = build("sym:3");
        assert_eq!(g.order(), 6);
        let mut noncommuting = 0;
        for a in 0..6 {
            for b in 0..6 {
                if g.mul(a, b) != g.mul(b, a) {
                    noncommuting += 1;
                }
            }
        }
        assert!(noncommuting > 0);
        // 18 ordered non-commuting pairs; equivalently Σ|C(g)| = 18.
        assert_eq!(noncommuting, 18);
        let commuting: usize = (0..6).map(|a| g.centralizer(a).card()).sum();
        assert_eq!(commuting, 18);
        assert!(!g.is_abelian());
    }

    #[test]
    fn psl2_5_has_order_60() {
        let g = build("psl2:5");
        assert_eq!(g.order(), 60);
        // Independent count: 2x2 matrices over F_5 with det 1, modulo ±I.
        let mut sl = 0u32;
        for a in 0..5u64 {
            for b in 0..5u64 {
                for c in 0..5u64 {
                    for d in 0..5u64 {
                        if (a * d + 25 - b * c) % 5 == 1 {
                            sl += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(sl, 120);
        assert_eq!(sl / 2, 60);
        assert!(!g.is_abelian());
    }

    #[test]
    fn psl2_2_has_order_6() {
        let g = build("psl2:2");
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        for spec in ["cyclic:5", "sym:3", "dihedral:4"] {
            let g = build(spec);
            assert_eq!(g.centralizer(0).card(), g.order());
        }
    }

    #[test]
    fn centralizer_in_abelian_group_is_everything() {
        let g = build("cyclic:8");
        for e in 0..8 {
            assert_eq!(g.centralizer(e).card(), 8);
        }
    }

    #[test]
    fn centralizer_of_transposition_in_sym3_has_size_2() {
        let g = build("sym:3");
        // transpositions are the order-2 elements
        let t = (1..6).find(|&e| g.mul(e, e) == 0).unwrap();
        let c = g.centralizer(t);
        assert_eq!(c.card(), 2);
        assert!(c.contains(0) && c.contains(t));
    }

    #[test]
    fn centralizers_are_subgroups() {
        for spec in ["sym:3", "dihedral:4", "psl2:3"] {
            let g = build(spec);
            for e in g.elements() {
                let c = g.centralizer(e);
                for a in c.iter() {
                    assert!(c.contains(g.inv(a)));
                    for b in c.iter() {
                        assert!(c.contains(g.mul(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn min_centralizer_index_examples() {
        assert_eq!(build("cyclic:6").min_centralizer_index(), rat(1, 1));
        // S_3: transpositions give index 3, 3-cycles index 2; min is 2.
        assert_eq!(build("sym:3").min_centralizer_index(), rat(2, 1));
        assert!(build("psl2:5").min_centralizer_index() > rat(1, 1));
    }

    #[test]
    fn inverse_antihomomorphism_holds() {
        for spec in ["cyclic:7", "sym:3", "dihedral:5", "psl2:3", "cyclic:2*sym:3"] {
            let g = build(spec);
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
                }
            }
        }
    }

    #[test]
    fn build_is_deterministic() {
        let a = build("psl2:5").to_table_string();
        let b = build("psl2:5").to_table_string();
        assert_eq!(a, b);
    }

    #[test]
    fn table_round_trip() {
        let g = build("dihedral:4");
        let text = g.to_table_string();
        let h = FiniteGroup::from_table_str(&text, "file:test".into()).unwrap();
        assert_eq!(g.order(), h.order());
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.mul(a, b), h.mul(a, b));
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        // identity not at index 0
        let t = "order 2\na b\n1 0\n0 1\n";
        assert!(FiniteGroup::from_table_str(t, "t".into()).is_err());
        // non-bijective row
        let t = "order 2\na b\n0 0\n1 0\n";
        assert!(FiniteGroup::from_table_str(t, "t".into()).is_err());
        // duplicate names
        let t = "order 2\na a\n0 1\n1 0\n";
        assert!(FiniteGroup::from_table_str(t, "t".into()).is_err());
        // associativity failure: a valid Latin square with identity that is
        // not a group (order 5 loop).
        let t = "order 5\ne a b c d\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let r = FiniteGroup::from_table_str(t, "t".into());
        assert!(r.is_err(), "non-associative table must be rejected");
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            GroupSpec::parse("sym:8").unwrap().build(),
            Err(GroupError::OrderCap { .. })
        ));
        assert!(GroupSpec::parse("cyclic:20000")
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn product_spec_builds() {
        let g = build("cyclic:2*sym:3");
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        let h = build("cyclic:2*cyclic:3");
        assert!(h.is_abelian());
        assert_eq!(GroupSpec::parse("cyclic:2*sym:3").unwrap().to_string(), "cyclic:2*sym:3");
    }

    #[test]
    fn spec_parse_errors() {
        assert!(GroupSpec::parse("").is_err());
        assert!(GroupSpec::parse("nope:3").is_err());
        assert!(GroupSpec::parse("cyclic:x").is_err());
        assert!(GroupSpec::parse("psl2:6").unwrap().build().is_err());
        assert!(GroupSpec::parse("cyclic:0").unwrap().build().is_err());
    }
}
