//! Combinatorics of the 2-torsion group of a genus-3 hyperelliptic Jacobian.
//!
//! A hyperelliptic curve of genus 3 has 8 Weierstrass points, indexed here by
//! `I = {1,..,8}`. Every 2-torsion point of the Jacobian is represented by an
//! even-cardinality subset of `I`, with a subset and its complement giving the
//! same point. The group law is symmetric difference and the Weil pairing is
//! `e(S,T) = |S ∩ T| mod 2`, a non-degenerate symplectic form on F₂⁶.
//!
//! Subsets are stored as 8-bit masks (bit `i-1` set ⇔ index `i` present), so
//! the whole group fits in a byte and exhaustive enumeration is trivial.

use std::fmt;

use crate::error::{Error, Result};

/// Bitmask of the full index set `I = {1,..,8}`.
pub const FULL_MASK: u8 = 0xff;

/// A 2-torsion class in the Weierstrass-subset model.
///
/// The stored representative is canonical: even size at most 4, and among a
/// size-4 subset and its complement the lexicographically smaller one (the one
/// containing index 1). The zero element is the empty subset.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoTorsion {
    mask: u8,
}

impl TwoTorsion {
    /// The zero element.
    pub const ZERO: TwoTorsion = TwoTorsion { mask: 0 };

    /// Canonicalizes a raw even subset given as a bitmask.
    ///
    /// Subsets of size 6 or 8 are replaced by their complements; size-4 ties
    /// are broken lexicographically, which picks the representative containing
    /// index 1. Odd-cardinality masks are rejected.
    pub fn from_mask(raw: u8) -> Result<TwoTorsion> {
        let size = raw.count_ones();
        if size % 2 != 0 {
            return Err(Error::InvalidSubset(format!(
                "subset {} has odd cardinality {size}",
                format_subset(raw)
            )));
        }
        let mask = match size {
            0 | 2 => raw,
            4 => {
                // Exactly one of a size-4 subset and its complement contains
                // index 1; that one is lexicographically smaller.
                if raw & 1 != 0 {
                    raw
                } else {
                    !raw
                }
            }
            _ => !raw,
        };
        Ok(TwoTorsion { mask })
    }

    /// Canonicalizes a subset given as a list of indices in `1..=8`.
    pub fn from_indices(indices: &[u8]) -> Result<TwoTorsion> {
        let mut raw = 0u8;
        for &i in indices {
            if !(1..=8).contains(&i) {
                return Err(Error::InvalidSubset(format!("index {i} outside 1..=8")));
            }
            if raw & (1 << (i - 1)) != 0 {
                return Err(Error::InvalidSubset(format!("repeated index {i}")));
            }
            raw |= 1 << (i - 1);
        }
        TwoTorsion::from_mask(raw)
    }

    /// Canonical representative as a bitmask.
    pub fn mask(self) -> u8 {
        self.mask
    }

    /// Cardinality of the canonical representative (0, 2 or 4).
    pub fn size(self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_zero(self) -> bool {
        self.mask == 0
    }

    /// Indices of the canonical representative, ascending.
    pub fn indices(self) -> Vec<u8> {
        (1..=8).filter(|i| self.mask & (1 << (i - 1)) != 0).collect()
    }

    /// Group law: symmetric difference of representatives, re-canonicalized.
    pub fn add(self, other: TwoTorsion) -> TwoTorsion {
        TwoTorsion::from_mask(self.mask ^ other.mask).expect("xor of even masks is even")
    }

    /// Weil pairing `e(S,T) = |S ∩ T| mod 2`.
    ///
    /// Well defined on classes: replacing a representative by its complement
    /// changes the intersection size by an even amount because all
    /// representatives have even cardinality.
    pub fn weil_pairing(self, other: TwoTorsion) -> u8 {
        ((self.mask & other.mask).count_ones() % 2) as u8
    }

    /// Subset-lexicographic comparison key; smaller key = lexicographically
    /// earlier index sequence. Bit-reversal makes index 1 most significant.
    fn lex_key(self) -> u8 {
        !self.mask.reverse_bits()
    }
}

impl Ord for TwoTorsion {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), self.lex_key()).cmp(&(other.size(), other.lex_key()))
    }
}

impl PartialOrd for TwoTorsion {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TwoTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_subset(self.mask))
    }
}

impl fmt::Display for TwoTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Renders a subset mask as `{i,j,..}`.
pub fn format_subset(mask: u8) -> String {
    let items: Vec<String> = (1..=8u8)
        .filter(|i| mask & (1 << (i - 1)) != 0)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// An order-4 subgroup of the 2-torsion group: three nonzero classes, each
/// the sum of the other two, stored in ascending (size, lex) order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct KleinSubgroup {
    elems: [TwoTorsion; 3],
}

impl KleinSubgroup {
    /// Builds the subgroup spanned by two classes.
    ///
    /// Fails if either generator is zero or the generators coincide.
    pub fn new(a: TwoTorsion, b: TwoTorsion) -> Result<KleinSubgroup> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateGenerators(
                "generators must be nonzero".into(),
            ));
        }
        if a == b {
            return Err(Error::DegenerateGenerators(format!(
                "generators coincide: {a}"
            )));
        }
        let mut elems = [a, b, a.add(b)];
        elems.sort();
        Ok(KleinSubgroup { elems })
    }

    /// The three nonzero elements in ascending (size, lex) order.
    pub fn elements(&self) -> [TwoTorsion; 3] {
        self.elems
    }

    /// Multiset of representative sizes, ascending.
    pub fn size_pattern(&self) -> [u32; 3] {
        [
            self.elems[0].size(),
            self.elems[1].size(),
            self.elems[2].size(),
        ]
    }

    /// True iff the Weil pairing vanishes on all pairs of elements.
    pub fn is_isotropic(&self) -> bool {
        self.elems[0].weil_pairing(self.elems[1]) == 0
            && self.elems[0].weil_pairing(self.elems[2]) == 0
            && self.elems[1].weil_pairing(self.elems[2]) == 0
    }
}

impl fmt::Display for KleinSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.elems[0], self.elems[1])
    }
}

/// The four irreducible components of the moduli of Klein coverings,
/// distinguished by the Weierstrass-point configuration of the generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CaseLabel {
    I1,
    I2,
    II1,
    II2,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [CaseLabel::I1, CaseLabel::I2, CaseLabel::II1, CaseLabel::II2];

    /// Cases II.1 and II.2 are the isotropic ones.
    pub fn is_isotropic(self) -> bool {
        matches!(self, CaseLabel::II1 | CaseLabel::II2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::I1 => "I.1",
            CaseLabel::I2 => "I.2",
            CaseLabel::II1 => "II.1",
            CaseLabel::II2 => "II.2",
        }
    }

    /// Parses `I.1`, `I1`, `ii.2`, ...
    pub fn parse(s: &str) -> Option<CaseLabel> {
        match s.to_ascii_uppercase().replace('.', "").as_str() {
            "I1" => Some(CaseLabel::I1),
            "I2" => Some(CaseLabel::I2),
            "II1" => Some(CaseLabel::II1),
            "II2" => Some(CaseLabel::II2),
            _ => None,
        }
    }

    /// The generators used throughout for a representative subgroup of the case.
    pub fn canonical_generators(self) -> (TwoTorsion, TwoTorsion) {
        let tt = |idx: &[u8]| TwoTorsion::from_indices(idx).expect("canonical generators");
        match self {
            CaseLabel::I1 => (tt(&[1, 2]), tt(&[1, 3])),
            CaseLabel::I2 => (tt(&[1, 2]), tt(&[1, 3, 4, 5])),
            CaseLabel::II1 => (tt(&[1, 2, 3, 4]), tt(&[1, 2, 5, 6])),
            CaseLabel::II2 => (tt(&[1, 2]), tt(&[3, 4])),
        }
    }

    /// The canonical subgroup of this case.
    pub fn canonical_subgroup(self) -> KleinSubgroup {
        let (a, b) = self.canonical_generators();
        KleinSubgroup::new(a, b).expect("canonical generators span a Klein subgroup")
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Case label together with its isotropy flag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CaseType {
    pub label: CaseLabel,
    pub isotropic: bool,
}

/// All 64 classes of the 2-torsion group, zero first, then ascending
/// (size, lex): 28 of size 2 followed by 35 of size 4.
pub fn enumerate_two_torsion() -> Vec<TwoTorsion> {
    let mut all: Vec<TwoTorsion> = (0u16..256)
        .filter(|m| (*m as u8).count_ones() % 2 == 0)
        .map(|m| TwoTorsion::from_mask(m as u8).unwrap())
        .collect();
    all.sort();
    all.dedup();
    all
}

/// All 651 Klein subgroups, each listed once, in ascending order of their two
/// smallest elements.
pub fn enumerate_klein_subgroups() -> Vec<KleinSubgroup> {
    let nonzero: Vec<TwoTorsion> = enumerate_two_torsion()
        .into_iter()
        .filter(|t| !t.is_zero())
        .collect();
    let mut out = Vec::with_capacity(651);
    for (i, &a) in nonzero.iter().enumerate() {
        for &b in &nonzero[i + 1..] {
            // Keep the pair only when it consists of the subgroup's two
            // smallest elements, so each subgroup appears exactly once.
            if a.add(b) > b {
                out.push(KleinSubgroup::new(a, b).expect("distinct nonzero classes"));
            }
        }
    }
    out
}

/// Classifies a Klein subgroup by the size multiset of its elements.
///
/// The four possible multisets determine the component, and each forces the
/// isotropy; both facts are re-checked at runtime and any disagreement is an
/// internal-consistency error.
pub fn classify_subgroup(k: &KleinSubgroup) -> Result<CaseType> {
    let label = match k.size_pattern() {
        [2, 2, 2] => CaseLabel::I1,
        [2, 4, 4] => CaseLabel::I2,
        [4, 4, 4] => CaseLabel::II1,
        [2, 2, 4] => CaseLabel::II2,
        other => {
            return Err(Error::InternalConsistency(format!(
                "size pattern {other:?} of {k} matches no component"
            )))
        }
    };
    let isotropic = k.is_isotropic();
    if isotropic != label.is_isotropic() {
        return Err(Error::InternalConsistency(format!(
            "{k}: size pattern says {label} but isotropy is {isotropic}"
        )));
    }
    Ok(CaseType { label, isotropic })
}

/// Census of all Klein subgroups by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub counts: [(CaseLabel, usize); 4],
    pub isotropic_total: usize,
    pub non_isotropic_total: usize,
    pub grand_total: usize,
}

impl ClassificationReport {
    pub fn count(&self, label: CaseLabel) -> usize {
        self.counts
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, n)| *n)
            .unwrap_or(0)
    }
}

/// Enumerates and classifies every Klein subgroup.
///
/// The tallies are always recomputed; the reference values from the component
/// count live only in tests and in the command-line census check.
pub fn classification_census() -> Result<ClassificationReport> {
    let mut counts = [
        (CaseLabel::I1, 0usize),
        (CaseLabel::I2, 0),
        (CaseLabel::II1, 0),
        (CaseLabel::II2, 0),
    ];
    let mut isotropic_total = 0;
    let mut grand_total = 0;
    for k in enumerate_klein_subgroups() {
        let case = classify_subgroup(&k)?;
        for entry in counts.iter_mut() {
            if entry.0 == case.label {
                entry.1 += 1;
            }
        }
        if case.isotropic {
            isotropic_total += 1;
        }
        grand_total += 1;
    }
    Ok(ClassificationReport {
        counts,
        isotropic_total,
        non_isotropic_total: grand_total - isotropic_total,
        grand_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(idx: &[u8]) -> TwoTorsion {
        TwoTorsion::from_indices(idx).unwrap()
    }

    #[test]
    fn canonical_rep_takes_smaller_complement() {
        assert_eq!(tt(&[1, 2, 3, 4, 5, 6]), tt(&[7, 8]));
        assert_eq!(tt(&[1, 2, 3, 4, 5, 6, 7, 8]), TwoTorsion::ZERO);
    }

    #[test]
    fn canonical_rep_breaks_size4_ties_lexicographically() {
        let t = tt(&[2, 4, 6, 8]);
        assert_eq!(t.indices(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn canonical_rep_rejects_odd_subsets() {
        assert!(matches!(
            TwoTorsion::from_indices(&[1, 2, 3]),
            Err(Error::InvalidSubset(_))
        ));
    }

    #[test]
    fn addition_is_symmetric_difference() {
        assert_eq!(tt(&[1, 2]).add(tt(&[1, 3])), tt(&[2, 3]));
        assert_eq!(tt(&[1, 2]).add(tt(&[1, 3, 4, 5])), tt(&[2, 3, 4, 5]));
        assert_eq!(tt(&[1, 2]).add(tt(&[1, 2])), TwoTorsion::ZERO);
    }

    #[test]
    fn weil_pairing_examples() {
        assert_eq!(tt(&[1, 2]).weil_pairing(tt(&[1, 3])), 1);
        assert_eq!(tt(&[1, 2]).weil_pairing(tt(&[3, 4])), 0);
        for t in enumerate_two_torsion() {
            assert_eq!(t.weil_pairing(t), 0);
        }
    }

    #[test]
    fn two_torsion_has_64_classes_with_expected_sizes() {
        let all = enumerate_two_torsion();
        assert_eq!(all.len(), 64);
        assert_eq!(all.iter().filter(|t| !t.is_zero()).count(), 63);
        assert_eq!(all.iter().filter(|t| t.size() == 2).count(), 28);
        assert_eq!(all.iter().filter(|t| t.size() == 4).count(), 35);
    }

    #[test]
    fn klein_subgroups_number_651_and_are_distinct_subgroups() {
        let subs = enumerate_klein_subgroups();
        assert_eq!(subs.len(), 651);
        let mut seen = std::collections::HashSet::new();
        for k in &subs {
            let e = k.elements();
            assert_eq!(e[0].add(e[1]), e[2]);
            assert_eq!(e[0].add(e[2]), e[1]);
            assert!(seen.insert(e.map(|t| t.mask())));
        }
    }

    #[test]
    fn classification_of_the_four_canonical_subgroups() {
        let expect = [
            (CaseLabel::I1, false),
            (CaseLabel::I2, false),
            (CaseLabel::II1, true),
            (CaseLabel::II2, true),
        ];
        for (label, iso) in expect {
            let case = classify_subgroup(&label.canonical_subgroup()).unwrap();
            assert_eq!(case.label, label);
            assert_eq!(case.isotropic, iso);
        }
    }

    #[test]
    fn census_matches_component_degrees() {
        let report = classification_census().unwrap();
        assert_eq!(report.count(CaseLabel::I1), 56);
        assert_eq!(report.count(CaseLabel::I2), 280);
        assert_eq!(report.count(CaseLabel::II1), 105);
        assert_eq!(report.count(CaseLabel::II2), 210);
        assert_eq!(report.isotropic_total, 315);
        assert_eq!(report.non_isotropic_total, 336);
        assert_eq!(report.grand_total, 651);
    }

    #[test]
    fn degenerate_generators_are_rejected() {
        assert!(KleinSubgroup::new(tt(&[1, 2]), tt(&[1, 2])).is_err());
        assert!(KleinSubgroup::new(TwoTorsion::ZERO, tt(&[1, 2])).is_err());
    }
}
