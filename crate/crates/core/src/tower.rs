//! The (ℤ/2)³ covering tower above the projective line attached to a Klein
//! subgroup.
//!
//! Writing the genus-3 curve as `y² = f_I(x)` with `f_I = ∏_{i∈I}(x - u_i)`,
//! the top curve of the tower is the normalization of the multiquadratic
//! function field generated by the three square roots of `f_{s_eta}`,
//! `f_{s_xi}` and `f_I`. The deck group is F₂³ acting by sign flips on the
//! three roots, and every quotient curve is cut out by the characters that
//! vanish on its deck subgroup: the quotient by a subgroup `K` is the
//! multiquadratic curve of the character set `K^⊥`.
//!
//! Everything in this module is exact integer combinatorics; no field
//! arithmetic happens here. Character `(a,b,c)` corresponds to the branch
//! subset `a·s_eta Δ b·s_xi Δ c·I` (symmetric differences of actual subsets,
//! no complement reduction), whose quadratic curve has genus `|T|/2 - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2sym::{
    classify_subgroup, format_subset, CaseLabel, CaseType, KleinSubgroup, TwoTorsion, FULL_MASK,
};

/// A deck transformation of the composite cover: sign flips `(a,b,c)` applied
/// to the square roots of `f_{s_eta}`, `f_{s_xi}`, `f_I` respectively, encoded
/// as the integer `a + 2b + 4c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeckElement(pub u8);

impl DeckElement {
    pub const IDENTITY: DeckElement = DeckElement(0);
    /// Flip of the `f_{s_eta}` root.
    pub const SIGMA: DeckElement = DeckElement(1);
    /// Flip of the `f_{s_xi}` root.
    pub const TAU: DeckElement = DeckElement(2);
    /// Flip of the `f_I` root; its coset over ⟨σ,τ⟩ consists of the four
    /// lifts of the hyperelliptic involution.
    pub const IOTA: DeckElement = DeckElement(4);

    pub fn all() -> impl Iterator<Item = DeckElement> {
        (0u8..8).map(DeckElement)
    }

    pub fn compose(self, other: DeckElement) -> DeckElement {
        DeckElement(self.0 ^ other.0)
    }

    /// True when this element projects to the hyperelliptic involution of the
    /// base curve, i.e. it flips the `f_I` root.
    pub fn is_lift(self) -> bool {
        self.0 & 4 != 0
    }

    /// Flip bits as a `(a,b,c)` tuple, used for lexicographic tie-breaking.
    pub fn flips(self) -> (u8, u8, u8) {
        (self.0 & 1, (self.0 >> 1) & 1, (self.0 >> 2) & 1)
    }
}

impl fmt::Debug for DeckElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.flips();
        write!(f, "({a},{b},{c})")
    }
}

/// A character of the deck group, encoded like [`DeckElement`]; the pairing is
/// the parity of the AND of the two bit patterns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DeckCharacter(pub u8);

impl DeckCharacter {
    /// The seven nontrivial characters, ascending.
    pub fn nonzero() -> impl Iterator<Item = DeckCharacter> {
        (1u8..8).map(DeckCharacter)
    }

    pub fn pairing(self, g: DeckElement) -> u8 {
        ((self.0 & g.0).count_ones() % 2) as u8
    }

    pub fn is_trivial_on(self, k: DeckSubgroup) -> bool {
        k.members().all(|g| self.pairing(g) == 0)
    }
}

/// A subgroup of the deck group, stored as an 8-bit membership mask over the
/// elements `0..8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeckSubgroup(u8);

impl DeckSubgroup {
    pub const TRIVIAL: DeckSubgroup = DeckSubgroup(1);
    pub const FULL: DeckSubgroup = DeckSubgroup(0xff);

    /// Span of a set of elements.
    pub fn generated_by(gens: &[DeckElement]) -> DeckSubgroup {
        let mut members = 1u8; // identity
        loop {
            let mut next = members;
            for g in 0..8u8 {
                if members & (1 << g) != 0 {
                    for &h in gens {
                        next |= 1 << (g ^ h.0);
                    }
                }
            }
            if next == members {
                return DeckSubgroup(members);
            }
            members = next;
        }
    }

    pub fn order(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, g: DeckElement) -> bool {
        self.0 & (1 << g.0) != 0
    }

    pub fn is_subgroup_of(self, other: DeckSubgroup) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn members(self) -> impl Iterator<Item = DeckElement> {
        let mask = self.0;
        (0u8..8).filter(move |g| mask & (1 << g) != 0).map(DeckElement)
    }

    /// Smallest subgroup containing both operands.
    pub fn join(self, other: DeckSubgroup) -> DeckSubgroup {
        let gens: Vec<DeckElement> = DeckSubgroup(self.0 | other.0).members().collect();
        DeckSubgroup::generated_by(&gens)
    }

    /// Subgroups of index 2, ascending.
    pub fn index_two_subgroups(self) -> Vec<DeckSubgroup> {
        all_subgroups()
            .into_iter()
            .filter(|k| k.is_subgroup_of(self) && 2 * k.order() == self.order())
            .collect()
    }
}

impl fmt::Debug for DeckSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .members()
            .filter(|g| *g != DeckElement::IDENTITY)
            .map(|g| format!("{g:?}"))
            .collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// All 16 subgroups of F₂³: trivial, the order-2 subgroups by generator, the
/// order-4 subgroups as kernels of the characters `1..=7` in that order, and
/// the full group. Node indices throughout rely on this layout.
pub fn all_subgroups() -> Vec<DeckSubgroup> {
    let mut out = vec![DeckSubgroup::TRIVIAL];
    for g in 1..8u8 {
        out.push(DeckSubgroup::generated_by(&[DeckElement(g)]));
    }
    for chi in DeckCharacter::nonzero() {
        let mut mask = 0u8;
        for g in 0..8u8 {
            if (g & chi.0).count_ones() % 2 == 0 {
                mask |= 1 << g;
            }
        }
        out.push(DeckSubgroup(mask));
    }
    out.push(DeckSubgroup::FULL);
    out
}

/// The actual branch subsets generating the multiquadratic model: `s_eta` is
/// the canonical representative of the smallest generator of the Klein
/// subgroup, `s_xi` of the next one in (size, lex) order; the third root is
/// always `f_I` and never stored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubsetTriple {
    s_eta: u8,
    s_xi: u8,
}

impl SubsetTriple {
    pub fn s_eta(self) -> u8 {
        self.s_eta
    }

    pub fn s_xi(self) -> u8 {
        self.s_xi
    }

    /// Branch subset of a nontrivial character `(a,b,c)`:
    /// `a·s_eta Δ b·s_xi Δ c·I` as an actual subset.
    pub fn chi_subset(self, chi: DeckCharacter) -> u8 {
        let mut t = 0u8;
        if chi.0 & 1 != 0 {
            t ^= self.s_eta;
        }
        if chi.0 & 2 != 0 {
            t ^= self.s_xi;
        }
        if chi.0 & 4 != 0 {
            t ^= FULL_MASK;
        }
        t
    }

    /// The seven character subsets, ascending in the character.
    pub fn character_subsets(self) -> [(DeckCharacter, u8); 7] {
        let mut out = [(DeckCharacter(0), 0u8); 7];
        for (slot, chi) in out.iter_mut().zip(DeckCharacter::nonzero()) {
            *slot = (chi, self.chi_subset(chi));
        }
        out
    }
}

/// Deterministic choice of defining subsets for a Klein subgroup.
pub fn lift_generators(k: &KleinSubgroup) -> SubsetTriple {
    let elems = k.elements();
    SubsetTriple {
        s_eta: elems[0].mask(),
        s_xi: elems[1].mask(),
    }
}

/// Genus of the double cover of the line branched over `T`: `|T|/2 - 1`.
pub fn genus_quadratic(subset: u8) -> Result<u32> {
    let size = subset.count_ones();
    if size == 0 {
        return Err(Error::InvalidSubset(
            "empty branch set defines no curve".into(),
        ));
    }
    if size % 2 != 0 {
        return Err(Error::InvalidSubset(format!(
            "branch set {} has odd cardinality",
            format_subset(subset)
        )));
    }
    Ok(size / 2 - 1)
}

/// Fixed-point counts of all eight deck elements on the top curve.
///
/// Each branch index `i` contributes 4 fixed points to the unique lift that
/// flips exactly the roots vanishing over `u_i`, namely
/// `ι·σ^[i∈s_eta]·τ^[i∈s_xi]`; the étale elements σ, τ, στ get none.
pub fn fixed_point_table(t: SubsetTriple) -> [u32; 8] {
    let mut counts = [0u32; 8];
    for i in 0..8 {
        let bit = 1u8 << i;
        let mut g = 4u8; // every branch point lies under `f_I`
        if t.s_eta & bit != 0 {
            g |= 1;
        }
        if t.s_xi & bit != 0 {
            g |= 2;
        }
        counts[g as usize] += 4;
    }
    counts
}

/// Genus of the quotient of the top curve by a deck subgroup: the sum of the
/// quadratic genera of the characters vanishing on it.
///
/// For a subgroup generated by a single lift the result is cross-checked
/// against Riemann–Hurwitz, `(20 - |Fix|)/4`; a mismatch would mean the
/// character bookkeeping and the ramification bookkeeping disagree.
pub fn quotient_genus(k_deck: DeckSubgroup, t: SubsetTriple) -> Result<u32> {
    let mut genus = 0u32;
    for chi in DeckCharacter::nonzero() {
        if chi.is_trivial_on(k_deck) {
            genus += genus_quadratic(t.chi_subset(chi))?;
        }
    }
    if k_deck.order() == 2 {
        let g = k_deck
            .members()
            .find(|g| *g != DeckElement::IDENTITY)
            .expect("order-2 subgroup has a nonidentity element");
        if g.is_lift() {
            let fix = fixed_point_table(t)[g.0 as usize];
            let rh = (20 - fix) / 4;
            if rh != genus {
                return Err(Error::InternalConsistency(format!(
                    "quotient by {g:?}: character genus {genus} vs Riemann-Hurwitz {rh}"
                )));
            }
        }
    }
    Ok(genus)
}

/// Labels for the four lifts of the hyperelliptic involution, assigned by
/// descending fixed-point count with flip-vector lexicographic tie-break.
/// The reference tables are invariant under relabeling, so this fixes one
/// deterministic convention.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LiftName {
    J,
    JSigma,
    JTau,
    JSigmaTau,
}

impl LiftName {
    pub const ALL: [LiftName; 4] = [
        LiftName::J,
        LiftName::JSigma,
        LiftName::JTau,
        LiftName::JSigmaTau,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LiftName::J => "j",
            LiftName::JSigma => "js",
            LiftName::JTau => "jt",
            LiftName::JSigmaTau => "jst",
        }
    }
}

/// One labeled lift with its fixed-point count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LiftAssignment {
    pub name: LiftName,
    pub element: DeckElement,
    pub fixed_points: u32,
}

fn assign_lifts(t: SubsetTriple) -> [LiftAssignment; 4] {
    let table = fixed_point_table(t);
    let mut lifts: Vec<(u32, (u8, u8, u8), DeckElement)> = DeckElement::all()
        .filter(|g| g.is_lift())
        .map(|g| (table[g.0 as usize], g.flips(), g))
        .collect();
    lifts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut out = [LiftAssignment {
        name: LiftName::J,
        element: DeckElement::IDENTITY,
        fixed_points: 0,
    }; 4];
    for (slot, (name, (fix, _, g))) in out.iter_mut().zip(LiftName::ALL.into_iter().zip(lifts)) {
        *slot = LiftAssignment {
            name,
            element: g,
            fixed_points: fix,
        };
    }
    out
}

/// One curve in the 16-node quotient lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveNode {
    /// Position in [`TowerDiagram::nodes`].
    pub index: usize,
    pub deck_subgroup: DeckSubgroup,
    pub name: String,
    /// Single-letter name from the reference tables, where one exists.
    pub alias: Option<String>,
    pub genus: u32,
    /// Degree of the induced map to the line: `8 / |deck_subgroup|`.
    pub deg_over_line: u32,
    /// Branch subset of the defining character, present iff the node is a
    /// double cover of the line.
    pub defining_subset: Option<u8>,
    /// True iff the quotient map from the top curve factors through an étale
    /// double cover, i.e. the Jacobian pullback has nontrivial kernel.
    pub starred: bool,
    /// Hyperellipticity where the double-cover criterion decides it: the top
    /// curve and the three étale double covers of the base curve.
    pub hyperelliptic: Option<bool>,
    /// Elementary divisors of the principal polarization of the top Jacobian
    /// restricted to this node's image, where unconditionally known.
    pub restricted_polarization: Option<Vec<u64>>,
}

/// The full quotient lattice of one Klein covering.
#[derive(Clone, Debug)]
pub struct TowerDiagram {
    pub case: CaseType,
    pub subgroup: KleinSubgroup,
    pub triple: SubsetTriple,
    /// 16 nodes: top, the 7 order-2 quotients, the 7 double covers of the
    /// line (indexed by their character, node `7 + chi`), and the line.
    pub nodes: Vec<CurveNode>,
    /// Covering relations of the subgroup lattice as (source, target) indices.
    pub edges: Vec<(usize, usize)>,
    pub lifts: [LiftAssignment; 4],
}

pub const TOP_NODE: usize = 0;
pub const BASE_NODE: usize = 15;

impl TowerDiagram {
    /// Node index of the quotient by an order-2 subgroup ⟨g⟩, `g` in `1..=7`.
    pub fn order2_node(&self, g: DeckElement) -> usize {
        debug_assert!(g.0 >= 1 && g.0 <= 7);
        g.0 as usize
    }

    /// Node index of the double cover attached to a nontrivial character.
    pub fn quadratic_node(&self, chi: DeckCharacter) -> usize {
        debug_assert!(chi.0 >= 1 && chi.0 <= 7);
        7 + chi.0 as usize
    }

    /// The node whose deck subgroup is `k`, if `k` is one of the 16 subgroups.
    pub fn node_of_subgroup(&self, k: DeckSubgroup) -> Option<usize> {
        self.nodes.iter().position(|n| n.deck_subgroup == k)
    }

    /// Node index of the base-curve quotient (deck subgroup ⟨σ,τ⟩).
    pub fn h_node(&self) -> usize {
        self.quadratic_node(DeckCharacter(4))
    }

    /// Labeled lift element.
    pub fn lift(&self, name: LiftName) -> DeckElement {
        self.lifts
            .iter()
            .find(|l| l.name == name)
            .expect("all four lift labels are assigned")
            .element
    }

    /// Fixed-point counts for the four lifts, in label order.
    pub fn fixed_point_multiset(&self) -> [u32; 4] {
        [
            self.lifts[0].fixed_points,
            self.lifts[1].fixed_points,
            self.lifts[2].fixed_points,
            self.lifts[3].fixed_points,
        ]
    }

    /// Intersection of two Jacobians inside the top Jacobian: the node of the
    /// subgroup generated by the two deck subgroups (join in the lattice).
    pub fn jacobian_intersection(&self, a: usize, b: usize) -> usize {
        let join = self.nodes[a].deck_subgroup.join(self.nodes[b].deck_subgroup);
        self.node_of_subgroup(join)
            .expect("every subgroup of the deck group owns a node")
    }
}

/// Double covers of the base curve are hyperelliptic exactly when the defining
/// 2-torsion class is a difference of two Weierstrass points.
pub fn hyperelliptic_flag(class: TwoTorsion) -> bool {
    class.size() == 2
}

fn etale_class(t: SubsetTriple, g: DeckElement) -> TwoTorsion {
    // The double cover of the base curve retained in C~/<g> is defined by the
    // class whose square root survives the quotient.
    let subset = match g.0 {
        1 => t.s_xi,
        2 => t.s_eta,
        3 => t.s_eta ^ t.s_xi,
        _ => unreachable!("not an etale deck element"),
    };
    TwoTorsion::from_mask(subset).expect("branch subsets have even cardinality")
}

fn order2_name(t: SubsetTriple, lifts: &[LiftAssignment; 4], g: DeckElement) -> String {
    match g.0 {
        1 => "Cxi".into(),
        2 => "Ceta".into(),
        3 => "Cetaxi".into(),
        _ => {
            let name = lifts
                .iter()
                .find(|l| l.element == g)
                .expect("lift elements cover 4..8")
                .name;
            let _ = t;
            format!("C{}", name.as_str())
        }
    }
}

fn quadratic_name(subset: u8) -> String {
    let digits: String = (1..=8u8)
        .filter(|i| subset & (1 << (i - 1)) != 0)
        .map(|i| char::from(b'0' + i))
        .collect();
    format!("Q{digits}")
}

/// Single-letter aliases from the reference tables, per case.
fn assign_aliases(case: CaseLabel, lifts: &[LiftAssignment; 4], nodes: &mut [CurveNode]) {
    let lift = |name: LiftName| -> DeckElement {
        lifts
            .iter()
            .find(|l| l.name == name)
            .expect("assigned")
            .element
    };
    let j = lift(LiftName::J);
    let js = lift(LiftName::JSigma);
    let jt = lift(LiftName::JTau);
    let jst = lift(LiftName::JSigmaTau);
    let sigma = j.compose(js);
    let tau = j.compose(jt);
    let sigma_tau = j.compose(jst);

    let mut set = |gens: &[DeckElement], alias: &str| {
        let k = DeckSubgroup::generated_by(gens);
        let node = nodes
            .iter_mut()
            .find(|n| n.deck_subgroup == k)
            .expect("subgroup owns a node");
        node.alias = Some(alias.to_string());
    };

    set(&[DeckElement::SIGMA, DeckElement::TAU], "H");
    match case {
        CaseLabel::I1 => {}
        CaseLabel::I2 => {
            set(&[sigma, jt], "H'");
            set(&[j, tau], "E");
            set(&[j, sigma_tau], "E'");
            set(&[js, tau], "F");
            set(&[js, sigma_tau], "F'");
        }
        CaseLabel::II1 => {
            set(&[j, js], "E");
            set(&[j, jt], "F");
            set(&[j, jst], "G");
            set(&[jt, jst], "E'");
            set(&[js, jst], "F'");
            set(&[js, jt], "G'");
        }
        CaseLabel::II2 => {
            set(&[sigma, jt], "Ds");
            set(&[tau, js], "Dt");
            set(&[sigma_tau, js], "F");
            set(&[sigma_tau, j], "E");
            set(&[j], "Ej");
        }
    }
}

/// Builds the full 16-node tower for a Klein subgroup.
pub fn build_tower(k: &KleinSubgroup) -> Result<TowerDiagram> {
    let case = classify_subgroup(k)?;
    let triple = lift_generators(k);
    let lifts = assign_lifts(triple);
    let subgroups = all_subgroups();
    debug_assert_eq!(subgroups.len(), 16);

    // Genus per subgroup, indexed like `subgroups`.
    let mut genera = Vec::with_capacity(16);
    for &sub in &subgroups {
        genera.push(quotient_genus(sub, triple)?);
    }
    let genus_of = |k: DeckSubgroup| -> u32 {
        genera[subgroups.iter().position(|s| *s == k).expect("known subgroup")]
    };

    let mut nodes = Vec::with_capacity(16);
    for (index, &sub) in subgroups.iter().enumerate() {
        let genus = genera[index];
        let deg_over_line = 8 / sub.order();
        let starred = sub
            .index_two_subgroups()
            .iter()
            .any(|kk| genus > 0 && genus_of(*kk) == 2 * genus - 1);

        let defining_subset = if sub.order() == 4 {
            let chi = DeckCharacter::nonzero()
                .find(|chi| chi.is_trivial_on(sub))
                .expect("an order-4 subgroup is the kernel of one character");
            Some(triple.chi_subset(chi))
        } else {
            None
        };

        let name = match sub.order() {
            1 => "Ctilde".to_string(),
            2 => {
                let g = sub
                    .members()
                    .find(|g| *g != DeckElement::IDENTITY)
                    .expect("nontrivial");
                order2_name(triple, &lifts, g)
            }
            4 => quadratic_name(defining_subset.expect("order-4 node has a subset")),
            _ => "P1".to_string(),
        };

        let hyperelliptic = match sub.order() {
            1 => Some(case.label == CaseLabel::I1),
            2 => {
                let g = sub
                    .members()
                    .find(|g| *g != DeckElement::IDENTITY)
                    .expect("nontrivial");
                if g.is_lift() {
                    None
                } else {
                    Some(hyperelliptic_flag(etale_class(triple, g)))
                }
            }
            _ => None,
        };

        let restricted_polarization = restricted_polarization(case.label, sub, genus, starred);

        nodes.push(CurveNode {
            index,
            deck_subgroup: sub,
            name,
            alias: None,
            genus,
            deg_over_line,
            defining_subset,
            starred,
            hyperelliptic,
            restricted_polarization,
        });
    }

    assign_aliases(case.label, &lifts, &mut nodes);

    let mut edges = Vec::with_capacity(35);
    for (i, a) in subgroups.iter().enumerate() {
        for (jdx, b) in subgroups.iter().enumerate() {
            if a.is_subgroup_of(*b) && b.order() == 2 * a.order() {
                edges.push((i, jdx));
            }
        }
    }

    Ok(TowerDiagram {
        case,
        subgroup: *k,
        triple,
        nodes,
        edges,
        lifts,
    })
}

fn restricted_polarization(
    case: CaseLabel,
    sub: DeckSubgroup,
    genus: u32,
    starred: bool,
) -> Option<Vec<u64>> {
    match sub.order() {
        1 => Some(vec![1; 9]),
        2 => {
            if genus == 0 {
                None
            } else if starred {
                // Etale double quotient: the pullback has a kernel and the
                // restricted type is only bounded, not fixed.
                None
            } else {
                // Ramified double quotient: twice a principal polarization.
                Some(vec![2; genus as usize])
            }
        }
        4 => {
            if sub == DeckSubgroup::generated_by(&[DeckElement::SIGMA, DeckElement::TAU]) {
                Some(if case.is_isotropic() {
                    vec![2, 2, 4]
                } else {
                    vec![1, 4, 4]
                })
            } else if genus == 0 || starred {
                None
            } else {
                Some(vec![4; genus as usize])
            }
        }
        _ => None,
    }
}

/// The restricted polarization of one isotypical component, either pinned by
/// the reference tables or bounded by divisibility.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolarizationBound {
    Fixed(Vec<u64>),
    Divides { exponent: u64, dim: u32, kernel_order: u64 },
}

impl fmt::Display for PolarizationBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarizationBound::Fixed(v) => {
                let items: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                write!(f, "({})", items.join(","))
            }
            PolarizationBound::Divides {
                exponent,
                dim,
                kernel_order,
            } => {
                let items = vec![exponent.to_string(); *dim as usize];
                write!(f, "divides ({}), kernel {}", items.join(","), kernel_order)
            }
        }
    }
}

/// One positive-dimensional piece of the isotypical decomposition of the Prym
/// variety.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrymComponent {
    /// Node carrying the piece: the character node itself, or its étale
    /// double-cover ancestor when the character node is starred of genus 1.
    pub node: usize,
    pub dimension: u32,
    pub polarization: PolarizationBound,
    pub starred: bool,
}

/// Predicted isogeny decomposition of one order-2 quotient Jacobian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsogenyPrediction {
    /// An order-2 quotient node.
    pub quotient: usize,
    /// Positive-genus double-cover nodes whose characters vanish on the
    /// quotient's deck subgroup; the quotient Jacobian is isogenous to their
    /// product.
    pub factors: Vec<usize>,
}

/// Decomposition metadata of the 6-dimensional Prym variety of the covering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrymSummary {
    pub components: Vec<PrymComponent>,
    /// Elementary divisors of the induced polarization on the Prym variety.
    pub prym_polarization: [u64; 6],
    pub isogeny_predictions: Vec<IsogenyPrediction>,
    /// Marked-point signature of the parameter space of the component.
    pub moduli_signature: &'static [u32],
    /// Dimension of the parameter space: sum of the signature minus 3.
    pub moduli_dimension: u32,
}

/// Isotypical decomposition data for the Prym variety of a Klein covering.
pub fn prym_decomposition(k: &KleinSubgroup) -> Result<PrymSummary> {
    let tower = build_tower(k)?;
    Ok(prym_summary(&tower))
}

/// Same as [`prym_decomposition`] but reusing an already built tower.
pub fn prym_summary(tower: &TowerDiagram) -> PrymSummary {
    let h_node = tower.h_node();
    let mut components = Vec::new();
    for chi in DeckCharacter::nonzero() {
        let idx = tower.quadratic_node(chi);
        if idx == h_node {
            continue;
        }
        let node = &tower.nodes[idx];
        if node.genus == 0 {
            continue;
        }
        if !node.starred {
            components.push(PrymComponent {
                node: idx,
                dimension: node.genus,
                polarization: PolarizationBound::Fixed(vec![4; node.genus as usize]),
                starred: false,
            });
        } else if node.genus == 1 {
            // The character piece appears as the Jacobian of the étale
            // double-cover ancestor, an order-2 quotient with a ramified map
            // from the top curve, so its type is pinned at (2).
            let ancestor = node
                .deck_subgroup
                .index_two_subgroups()
                .into_iter()
                .find(|kk| {
                    tower
                        .node_of_subgroup(*kk)
                        .map(|n| tower.nodes[n].genus == 2 * node.genus - 1)
                        .unwrap_or(false)
                })
                .expect("starred node has an etale intermediate");
            let anc_idx = tower.node_of_subgroup(ancestor).expect("node exists");
            components.push(PrymComponent {
                node: anc_idx,
                dimension: node.genus,
                polarization: PolarizationBound::Fixed(vec![2; node.genus as usize]),
                starred: false,
            });
        } else {
            components.push(PrymComponent {
                node: idx,
                dimension: node.genus,
                polarization: PolarizationBound::Divides {
                    exponent: 4,
                    dim: node.genus,
                    kernel_order: 2,
                },
                starred: true,
            });
        }
    }

    let mut isogeny_predictions = Vec::new();
    for g in 1..8u8 {
        let quotient = tower.order2_node(DeckElement(g));
        let sub = tower.nodes[quotient].deck_subgroup;
        let factors: Vec<usize> = DeckCharacter::nonzero()
            .filter(|chi| chi.is_trivial_on(sub))
            .map(|chi| tower.quadratic_node(chi))
            .filter(|idx| tower.nodes[*idx].genus > 0)
            .collect();
        isogeny_predictions.push(IsogenyPrediction { quotient, factors });
    }

    let prym_polarization = if tower.case.isotropic {
        [1, 1, 1, 2, 2, 4]
    } else {
        [1, 1, 1, 1, 4, 4]
    };

    let moduli_signature: &'static [u32] = match tower.case.label {
        CaseLabel::I1 => &[3, 5],
        CaseLabel::I2 => &[2, 3, 3],
        CaseLabel::II1 => &[2, 2, 2, 2],
        CaseLabel::II2 => &[2, 2, 4],
    };
    let moduli_dimension = moduli_signature.iter().sum::<u32>() - 3;

    PrymSummary {
        components,
        prym_polarization,
        isogeny_predictions,
        moduli_signature,
        moduli_dimension,
    }
}
