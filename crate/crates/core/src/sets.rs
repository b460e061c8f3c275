//! Subsets of a finite group and exact densities.
//!
//! An [`ElementSet`] is a flat bitmask over element indices; intersection,
//! union and cardinality are word-parallel, which is what the search
//! module's inner loops live on. Densities are exact rationals `|A| / |G|`,
//! so every threshold comparison in the crate is exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::rational::{rat_counts, Rat};
use crate::rng::XorShift64Star;

/// Which side a translation or shift acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A subset of `0..universe` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementSet({}/{}: ", self.card(), self.universe)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, e: usize) -> Self {
        Self::from_indices(universe, [e])
    }

    /// Clears any bits at or above `universe`.
    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn card(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.universe);
        self.words[e / 64] >> (e % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        assert!(e < self.universe, "element {e} out of universe {}", self.universe);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.universe);
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Self {
            universe: self.universe,
            words,
        }
    }

    pub fn intersect_in_place(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Self {
            universe: self.universe,
            words,
        }
    }

    pub fn union_in_place(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        Self {
            universe: self.universe,
            words,
        }
    }

    pub fn complement(&self) -> Self {
        let mut s = Self {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_card(&self, other: &Self) -> usize {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// A seeded subset of the given exact size.
    pub fn random_of_size(universe: usize, size: usize, rng: &mut XorShift64Star) -> Self {
        Self::from_indices(universe, rng.sample_indices(universe, size))
    }
}

/// Exact density `|A| / |G|` of a set in its universe.
pub fn density(set: &ElementSet) -> Rat {
    rat_counts(set.card() as u128, set.universe() as u128)
}

/// `gA` (left) or `Ag` (right). Bijective, so cardinality is preserved.
pub fn translate(group: &FiniteGroup, set: &ElementSet, g: usize, side: Side) -> ElementSet {
    assert_eq!(set.universe(), group.order());
    let mut out = ElementSet::empty(set.universe());
    match side {
        Side::Left => {
            for a in set.iter() {
                out.insert(group.mul(g, a));
            }
        }
        Side::Right => {
            for a in set.iter() {
                out.insert(group.mul(a, g));
            }
        }
    }
    out
}

/// Right: `A ∩ Ay⁻¹ = {x : x ∈ A and xy ∈ A}`.
/// Left: `y⁻¹A ∩ A = {x : x ∈ A and yx ∈ A}`.
pub fn shifted_intersection(
    group: &FiniteGroup,
    set: &ElementSet,
    y: usize,
    side: Side,
) -> ElementSet {
    assert_eq!(set.universe(), group.order());
    let mut out = ElementSet::empty(set.universe());
    for x in set.iter() {
        let shifted = match side {
            Side::Right => group.mul(x, y),
            Side::Left => group.mul(y, x),
        };
        if set.contains(shifted) {
            out.insert(x);
        }
    }
    out
}

/// An assignment of one color in `0..num_colors` to every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    num_colors: u32,
    classes: Vec<ElementSet>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, num_colors: u32) -> Self {
        assert!(num_colors > 0, "need at least one color");
        assert!(
            colors.iter().all(|&c| c < num_colors),
            "color index out of range"
        );
        let universe = colors.len();
        let mut classes = vec![ElementSet::empty(universe); num_colors as usize];
        for (e, &c) in colors.iter().enumerate() {
            classes[c as usize].insert(e);
        }
        Self {
            colors,
            num_colors,
            classes,
        }
    }

    pub fn constant(universe: usize) -> Self {
        Self::new(vec![0; universe], 1)
    }

    /// Seeded uniform random coloring from the pinned generator.
    pub fn random(universe: usize, num_colors: u32, seed: u64) -> Self {
        let mut rng = XorShift64Star::new(seed);
        let colors = (0..universe)
            .map(|_| rng.gen_range(num_colors as u64) as u32)
            .collect();
        Self::new(colors, num_colors)
    }

    /// Colors element `e` by `⌊e · num_colors / universe⌋`: contiguous blocks.
    pub fn blocks(universe: usize, num_colors: u32) -> Self {
        assert!(universe > 0);
        let colors = (0..universe)
            .map(|e| ((e as u64 * num_colors as u64) / universe as u64) as u32)
            .collect();
        Self::new(colors, num_colors)
    }

    /// Colors element `e` by `e mod num_colors`.
    pub fn residue(universe: usize, num_colors: u32) -> Self {
        let colors = (0..universe)
            .map(|e| (e as u64 % num_colors as u64) as u32)
            .collect();
        Self::new(colors, num_colors)
    }

    pub fn universe(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn class(&self, c: u32) -> &ElementSet {
        &self.classes[c as usize]
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// Renders the coloring text format: `colors r+1`, then `name colorIndex`
    /// per element in index order.
    pub fn to_file_string(&self, group: &FiniteGroup) -> String {
        assert_eq!(self.universe(), group.order());
        let mut out = format!("colors {}\n", self.num_colors);
        for e in 0..self.universe() {
            out.push_str(&format!("{} {}\n", group.name(e), self.colors[e]));
        }
        out
    }

    /// Parses the coloring text format against a group (names may come in
    /// any order, but every element must appear exactly once).
    pub fn from_file_str(text: &str, group: &FiniteGroup) -> Result<Self, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty coloring file")?;
        let mut it = header.split_whitespace();
        let num_colors: u32 = match (it.next(), it.next()) {
            (Some("colors"), Some(n)) => n.parse().map_err(|_| "bad colors header")?,
            _ => return Err("missing `colors r+1` header".into()),
        };
        if num_colors == 0 {
            return Err("need at least one color".into());
        }
        let mut colors = vec![u32::MAX; group.order()];
        for line in lines {
            let mut it = line.split_whitespace();
            let name = it.next().ok_or("missing element name")?;
            let color: u32 = it
                .next()
                .ok_or("missing color index")?
                .parse()
                .map_err(|_| "bad color index")?;
            if it.next().is_some() {
                return Err(format!("trailing tokens on line `{line}`"));
            }
            let e = group
                .element_by_name(name)
                .ok_or(format!("unknown element `{name}`"))?;
            if colors[e] != u32::MAX {
                return Err(format!("element `{name}` colored twice"));
            }
            if color >= num_colors {
                return Err(format!("color {color} out of range for `{name}`"));
            }
            colors[e] = color;
        }
        if let Some(e) = colors.iter().position(|&c| c == u32::MAX) {
            return Err(format!("element `{}` has no color", group.name(e)));
        }
        Ok(Self::new(colors, num_colors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::rational::rat;

    fn build(spec: &str) -> FiniteGroup {
        GroupSpec::parse(spec).unwrap().build().unwrap()
    }

    #[test]
    fn density_examples() {
        let n = 4;
        assert_eq!(density(&ElementSet::full(n)), rat(1, 1));
        assert_eq!(density(&ElementSet::empty(n)), rat(0, 1));
        let a = ElementSet::from_indices(n, [0, 1]);
        assert_eq!(density(&a), rat(1, 2));
    }

    #[test]
    fn translate_examples() {
        let z4 = build("cyclic:4");
        let a = ElementSet::from_indices(4, [0, 1]);
        assert_eq!(translate(&z4, &a, 0, Side::Left), a);
        let shifted = translate(&z4, &a, 1, Side::Left);
        assert_eq!(shifted.to_indices(), vec![1, 2]);
    }

    #[test]
    fn translation_preserves_density() {
        for spec in ["cyclic:12", "sym:3", "dihedral:5"] {
            let g = build(spec);
            let mut rng = XorShift64Star::new(11);
            for trial in 0..10 {
                let size = 1 + (trial % g.order());
                let a = ElementSet::random_of_size(g.order(), size, &mut rng);
                for e in g.elements() {
                    for side in [Side::Left, Side::Right] {
                        assert_eq!(density(&translate(&g, &a, e, side)), density(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn finite_additivity() {
        let g = build("cyclic:12");
        let mut rng = XorShift64Star::new(3);
        for _ in 0..20 {
            let a = ElementSet::random_of_size(12, rng.gen_range(13) as usize, &mut rng);
            let b = a.complement();
            let ab = a.union(&b);
            assert_eq!(density(&a) + density(&b), density(&ab));
            assert_eq!(density(&ab), rat(1, 1));
        }
    }

    #[test]
    fn shifted_intersection_z4() {
        // A = {0,1} in Z_4, y = 1, right side: A ∩ (A−1) = {0}.
        let z4 = build("cyclic:4");
        let a = ElementSet::from_indices(4, [0, 1]);
        let w = shifted_intersection(&z4, &a, 1, Side::Right);
        assert_eq!(w.to_indices(), vec![0]);
        assert_eq!(density(&w), rat(1, 4));
        // brute-force re-verification
        for x in 0..4 {
            let expected = a.contains(x) && a.contains(z4.mul(x, 1));
            assert_eq!(w.contains(x), expected);
        }
    }

    #[test]
    fn shifted_intersection_identity_and_full() {
        let g = build("sym:3");
        let a = ElementSet::from_indices(6, [0, 2, 4]);
        assert_eq!(shifted_intersection(&g, &a, 0, Side::Right), a);
        assert_eq!(shifted_intersection(&g, &a, 0, Side::Left), a);
        let full = ElementSet::full(6);
        for y in 0..6 {
            assert_eq!(shifted_intersection(&g, &full, y, Side::Right), full);
        }
    }

    #[test]
    fn shifted_intersection_membership_samples() {
        let g = build("dihedral:6");
        let mut rng = XorShift64Star::new(99);
        for _ in 0..20 {
            let a = ElementSet::random_of_size(12, rng.gen_range(13) as usize, &mut rng);
            let y = rng.gen_range(12) as usize;
            let right = shifted_intersection(&g, &a, y, Side::Right);
            let left = shifted_intersection(&g, &a, y, Side::Left);
            for x in 0..12 {
                assert_eq!(right.contains(x), a.contains(x) && a.contains(g.mul(x, y)));
                assert_eq!(left.contains(x), a.contains(x) && a.contains(g.mul(y, x)));
            }
        }
    }

    #[test]
    fn coloring_classes_partition() {
        let c = Coloring::random(20, 3, 7);
        let mut total = 0;
        for k in 0..3 {
            total += c.class(k).card();
        }
        assert_eq!(total, 20);
        for e in 0..20 {
            assert!(c.class(c.color(e)).contains(e));
        }
    }

    #[test]
    fn coloring_file_round_trip() {
        let g = build("sym:3");
        let c = Coloring::random(6, 2, 13);
        let text = c.to_file_string(&g);
        let parsed = Coloring::from_file_str(&text, &g).unwrap();
        assert_eq!(parsed, c);
        // malformed: missing an element
        let truncated: String = text.lines().take(4).collect::<Vec<_>>().join("\n");
        assert!(Coloring::from_file_str(&truncated, &g).is_err());
    }

    #[test]
    fn blocks_coloring_splits_in_halves() {
        let c = Coloring::blocks(24, 2);
        assert!((0..12).all(|e| c.color(e) == 0));
        assert!((12..24).all(|e| c.color(e) == 1));
    }

    #[test]
    fn set_iter_and_bit_ops() {
        let a = ElementSet::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(a.to_indices(), vec![0, 63, 64, 129]);
        assert_eq!(a.card(), 4);
        let b = a.complement();
        assert_eq!(b.card(), 126);
        assert!(a.is_disjoint_from(&b));
        assert_eq!(a.union(&b), ElementSet::full(130));
        assert!(a.intersect(&b).is_empty());
        assert!(ElementSet::from_indices(130, [63]).is_subset_of(&a));
    }
}
