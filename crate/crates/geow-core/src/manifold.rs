//! Invariant records for closed oriented 4-manifolds under cut-and-paste
//! constructions.
//!
//! A [`ManifoldClass`] stores the Euler characteristic and signature as
//! arbitrary-precision integers together with conservative status fields
//! (fundamental group, spin, minimality) and an inventory of distinguished
//! surfaces. Operations are pure functions; every derived quantity
//! (`c1^2`, `chi_h`, `b2`) is recomputed from the stored invariants.
//! Status fields only ever hold values the operation rules can justify;
//! anything else degrades to `Unknown` rather than guessing.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Fundamental group status. `Presented` points at a presentation
/// reference resolvable by the group catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi1 {
    Trivial,
    Z2,
    Unknown,
    Presented(String),
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1::Trivial => write!(f, "trivial"),
            Pi1::Z2 => write!(f, "z2"),
            Pi1::Unknown => write!(f, "unknown"),
            Pi1::Presented(r) => write!(f, "presented({r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Spin,
    NonSpin,
    Unknown,
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Spin => write!(f, "spin"),
            Spin::NonSpin => write!(f, "nonspin"),
            Spin::Unknown => write!(f, "unknown"),
        }
    }
}

/// Minimality is either established or unknown; operations never derive
/// "not minimal".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minimal {
    Yes,
    Unknown,
}

impl fmt::Display for Minimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Minimal::Yes => write!(f, "yes"),
            Minimal::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Symplectic,
    Lagrangian,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Symplectic => write!(f, "symplectic"),
            SurfaceKind::Lagrangian => write!(f, "lagrangian"),
        }
    }
}

/// Position of `c1^2` relative to the line `c1^2 = 9 chi_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BmyStatus {
    OnLine,
    Below,
    Violated,
}

impl fmt::Display for BmyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BmyStatus::OnLine => write!(f, "on_line"),
            BmyStatus::Below => write!(f, "below"),
            BmyStatus::Violated => write!(f, "violated"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Standard simply connected model `p CP2 # q mCP2` (odd intersection
/// form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub p: BigInt,
    pub q: BigInt,
    pub parity: Parity,
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} CP2 # {} mCP2", self.p, self.q)
    }
}

/// A distinguished (possibly nodally immersed) surface carried in a
/// manifold's inventory. `square` is the homological self-intersection;
/// `nodes` counts transverse double points; `intersections` records
/// pairwise geometric intersection counts with other inventory surfaces
/// and is kept symmetric by the owning [`ManifoldClass`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    id: String,
    genus: BigInt,
    square: BigInt,
    kind: SurfaceKind,
    pi1_surjects: bool,
    complement_simply_connected: bool,
    symplectic_embeddable: bool,
    nodes: u64,
    intersections: BTreeMap<String, u64>,
}

impl Surface {
    /// Panics on negative genus; surfaces are built by trusted code.
    pub fn new(
        id: impl Into<String>,
        genus: impl Into<BigInt>,
        square: impl Into<BigInt>,
        kind: SurfaceKind,
    ) -> Self {
        let genus = genus.into();
        assert!(!genus.is_negative(), "surface genus is non-negative");
        Surface {
            id: id.into(),
            genus,
            square: square.into(),
            kind,
            pi1_surjects: false,
            complement_simply_connected: false,
            symplectic_embeddable: false,
            nodes: 0,
            intersections: BTreeMap::new(),
        }
    }

    pub fn with_pi1_surjects(mut self, v: bool) -> Self {
        self.pi1_surjects = v;
        self
    }

    pub fn with_complement_simply_connected(mut self, v: bool) -> Self {
        self.complement_simply_connected = v;
        self
    }

    pub fn with_symplectic_embeddable(mut self, v: bool) -> Self {
        self.symplectic_embeddable = v;
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = nodes;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn genus(&self) -> &BigInt {
        &self.genus
    }

    pub fn square(&self) -> &BigInt {
        &self.square
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    /// Whether inclusion induces a surjection onto the ambient
    /// fundamental group.
    pub fn pi1_surjects(&self) -> bool {
        self.pi1_surjects
    }

    pub fn complement_simply_connected(&self) -> bool {
        self.complement_simply_connected
    }

    /// License for operations that need the surface to persist as a
    /// symplectically embedded torus across an infinite family.
    pub fn symplectic_embeddable(&self) -> bool {
        self.symplectic_embeddable
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn intersections(&self) -> &BTreeMap<String, u64> {
        &self.intersections
    }

    /// Recorded geometric intersection count with another surface.
    pub fn meets(&self, other: &str) -> u64 {
        self.intersections.get(other).copied().unwrap_or(0)
    }
}

/// Errors from manifold operations and the block library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("no surface `{0}` in the inventory")]
    UnknownSurface(String),
    #[error("surface id `{0}` already in use")]
    DuplicateSurface(String),
    #[error("surface `{0}` cannot be paired with itself")]
    SelfPairing(String),
    #[error("surface `{0}` has no nodes")]
    NoNode(String),
    #[error("operation count must be positive")]
    ZeroCount,
    #[error("{marked} marked points exceed {count} blow-ups")]
    TooManyPoints { marked: u64, count: u64 },
    #[error("surfaces meet in {have} recorded points, need at least {need}")]
    InsufficientIntersections { have: u64, need: u64 },
    #[error("gluing surfaces have different genus")]
    GenusMismatch,
    #[error("gluing surface squares do not sum to zero")]
    SquaresNotOpposite,
    #[error("surface `{0}` is not symplectic")]
    NotSymplecticKind(String),
    #[error("surface `{0}` has unresolved nodes")]
    NodalSurface(String),
    #[error("ambient manifold is not symplectic")]
    AmbientNotSymplectic,
    #[error("surface `{0}` is not a Lagrangian square zero torus")]
    NotLagrangianTorus(String),
    #[error("surface `{0}` is not a square zero torus")]
    NotSquareZeroTorus(String),
    #[error("surface `{0}` is not marked symplectically embeddable")]
    NotSymplecticallyEmbeddable(String),
    #[error("surgery coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("citation conflicts with a derived value: {0}")]
    CitationConflict(String),
    #[error("homeomorphism classification refused: {0}")]
    ClassifyRefused(String),
    #[error("e + sigma is not divisible by 4")]
    NonIntegralChi,
    #[error("no builtin block `{0}`")]
    UnknownBlock(String),
    #[error("bad block parameters: {0}")]
    BadBlockParams(String),
}

/// Invariant record of a closed oriented 4-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldClass {
    e: BigInt,
    sigma: BigInt,
    b1: BigInt,
    pi1: Pi1,
    spin: Spin,
    symplectic: bool,
    minimal: Minimal,
    provenance: Vec<String>,
    surfaces: Vec<Surface>,
}

impl ManifoldClass {
    pub fn new(e: impl Into<BigInt>, sigma: impl Into<BigInt>) -> Self {
        ManifoldClass {
            e: e.into(),
            sigma: sigma.into(),
            b1: BigInt::zero(),
            pi1: Pi1::Unknown,
            spin: Spin::Unknown,
            symplectic: false,
            minimal: Minimal::Unknown,
            provenance: Vec::new(),
            surfaces: Vec::new(),
        }
    }

    pub fn with_b1(mut self, b1: impl Into<BigInt>) -> Self {
        let b1 = b1.into();
        assert!(!b1.is_negative(), "b1 is non-negative");
        self.b1 = b1;
        self
    }

    pub fn with_pi1(mut self, pi1: Pi1) -> Self {
        self.pi1 = pi1;
        self
    }

    pub fn with_spin(mut self, spin: Spin) -> Self {
        self.spin = spin;
        self
    }

    pub fn with_symplectic(mut self, v: bool) -> Self {
        self.symplectic = v;
        self
    }

    pub fn with_minimal(mut self, minimal: Minimal) -> Self {
        self.minimal = minimal;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    /// Adds an inventory surface; ids must be unique.
    pub fn add_surface(&mut self, surface: Surface) -> Result<(), OpError> {
        if self.surface(&surface.id).is_some() {
            return Err(OpError::DuplicateSurface(surface.id));
        }
        self.surfaces.push(surface);
        Ok(())
    }

    /// Records a symmetric geometric intersection count between two
    /// inventory surfaces.
    pub fn record_intersection(&mut self, a: &str, b: &str, count: u64) -> Result<(), OpError> {
        if a == b {
            return Err(OpError::SelfPairing(a.to_string()));
        }
        self.surface(a).ok_or_else(|| OpError::UnknownSurface(a.to_string()))?;
        self.surface(b).ok_or_else(|| OpError::UnknownSurface(b.to_string()))?;
        self.surface_mut(a).unwrap().intersections.insert(b.to_string(), count);
        self.surface_mut(b).unwrap().intersections.insert(a.to_string(), count);
        Ok(())
    }

    pub fn e(&self) -> &BigInt {
        &self.e
    }

    pub fn sigma(&self) -> &BigInt {
        &self.sigma
    }

    /// Recorded first Betti number; meaningful when the fundamental group
    /// status pins it (it is zero whenever `pi1` is trivial or Z2).
    pub fn b1(&self) -> &BigInt {
        &self.b1
    }

    pub fn pi1(&self) -> &Pi1 {
        &self.pi1
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn is_symplectic(&self) -> bool {
        self.symplectic
    }

    pub fn minimal(&self) -> Minimal {
        self.minimal
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn surfaces(&self) -> &[Surface] {
        &self.surfaces
    }

    pub fn surface(&self, id: &str) -> Option<&Surface> {
        self.surfaces.iter().find(|s| s.id == id)
    }

    fn surface_mut(&mut self, id: &str) -> Option<&mut Surface> {
        self.surfaces.iter_mut().find(|s| s.id == id)
    }

    pub(crate) fn set_surface_pi1_surjects(&mut self, id: &str, v: bool) -> Result<(), OpError> {
        let s = self.surface_mut(id).ok_or_else(|| OpError::UnknownSurface(id.to_string()))?;
        s.pi1_surjects = v;
        Ok(())
    }

    /// `c1^2 = 3 sigma + 2 e`, always recomputed.
    pub fn c1_sq(&self) -> BigInt {
        BigInt::from(3) * &self.sigma + BigInt::from(2) * &self.e
    }

    /// Holomorphic Euler characteristic `(e + sigma) / 4` when integral.
    pub fn chi_h(&self) -> Option<BigInt> {
        let sum = &self.e + &self.sigma;
        let four = BigInt::from(4);
        sum.mod_floor(&four).is_zero().then(|| sum.div_floor(&four))
    }

    /// Second Betti number `e - 2 + 2 b1`, available only when the
    /// fundamental group status pins the Betti numbers.
    pub fn b2(&self) -> Option<BigInt> {
        match self.pi1 {
            Pi1::Trivial | Pi1::Z2 => Some(&self.e - 2 + BigInt::from(2) * &self.b1),
            _ => None,
        }
    }

    /// Upgrades the fundamental group status from a cited external fact.
    /// Upgrading is allowed from `Unknown` or a presentation reference;
    /// contradicting an established value is an error.
    pub fn cite_pi1(&mut self, claim: Pi1, tag: &str) -> Result<(), OpError> {
        if self.pi1 == claim {
            self.provenance.push(format!("pi1 {claim} reconfirmed by \"{tag}\""));
            return Ok(());
        }
        match self.pi1 {
            Pi1::Unknown | Pi1::Presented(_) => {
                if claim == Pi1::Trivial || claim == Pi1::Z2 {
                    self.b1 = BigInt::zero();
                }
                self.provenance.push(format!("pi1 {claim} cited from \"{tag}\""));
                self.pi1 = claim;
                Ok(())
            }
            _ => Err(OpError::CitationConflict(format!(
                "pi1 is {}, cited {claim}",
                self.pi1
            ))),
        }
    }

    pub fn cite_simply_connected(&mut self, tag: &str) -> Result<(), OpError> {
        self.cite_pi1(Pi1::Trivial, tag)
    }

    /// Marks the manifold non-spin from a cited external fact.
    pub fn cite_nonspin(&mut self, tag: &str) -> Result<(), OpError> {
        match self.spin {
            Spin::Spin => Err(OpError::CitationConflict("spin is established".to_string())),
            Spin::NonSpin => {
                self.provenance.push(format!("nonspin reconfirmed by \"{tag}\""));
                Ok(())
            }
            Spin::Unknown => {
                self.provenance.push(format!("nonspin cited from \"{tag}\""));
                self.spin = Spin::NonSpin;
                Ok(())
            }
        }
    }

    /// Applies sound downgrade rules: every surface in a simply connected
    /// ambient carries `pi1_surjects` vacuously, an even intersection form
    /// forces `sigma = 0 (mod 8)` so an off-lattice signature rules spin
    /// out, and any inventory surface of odd square rules the even form out.
    pub fn normalize(&mut self) {
        if self.pi1 == Pi1::Trivial {
            for s in &mut self.surfaces {
                s.pi1_surjects = true;
            }
        }
        if self.spin != Spin::Unknown {
            return;
        }
        if !self.sigma.mod_floor(&BigInt::from(8)).is_zero() {
            self.spin = Spin::NonSpin;
            self.provenance.push("nonspin: signature not divisible by 8".to_string());
            return;
        }
        if let Some(s) = self.surfaces.iter().find(|s| s.square.is_odd()) {
            self.spin = Spin::NonSpin;
            self.provenance.push(format!("nonspin: surface {} has odd square", s.id));
        }
    }

    /// One-line invariant summary used by reports.
    pub fn summary(&self) -> String {
        let chi = self.chi_h().map_or("-".to_string(), |c| c.to_string());
        format!(
            "e={} sigma={} c1sq={} chi={} b1={} pi1={} spin={} symplectic={} minimal={}",
            self.e,
            self.sigma,
            self.c1_sq(),
            chi,
            self.b1,
            self.pi1,
            self.spin,
            if self.symplectic { "yes" } else { "no" },
            self.minimal
        )
    }

    fn require_surface(&self, id: &str) -> Result<&Surface, OpError> {
        self.surface(id).ok_or_else(|| OpError::UnknownSurface(id.to_string()))
    }

    fn drop_surface(&mut self, id: &str) {
        self.surfaces.retain(|s| s.id != id);
        for s in &mut self.surfaces {
            s.intersections.remove(id);
        }
    }
}

/// Next free index for exceptional sphere ids `exc1`, `exc2`, ...
fn next_exc_index(m: &ManifoldClass) -> u64 {
    m.surfaces
        .iter()
        .filter_map(|s| s.id.strip_prefix("exc").and_then(|n| n.parse::<u64>().ok()))
        .max()
        .map_or(1, |n| n + 1)
}

fn exceptional_sphere(id: String, host: &ManifoldClass) -> Surface {
    let ambient_trivial = host.pi1 == Pi1::Trivial;
    Surface::new(id, 0u32, -1, SurfaceKind::Symplectic)
        .with_pi1_surjects(ambient_trivial)
        .with_complement_simply_connected(ambient_trivial)
        .with_symplectic_embeddable(host.symplectic)
}

/// Connected sum. Surfaces from both sides survive (the sum is taken away
/// from them); `pi1_surjects` and `complement_simply_connected` flags hold
/// up only when the opposite summand is simply connected. Clashing ids
/// from the right side get a `_b` suffix.
pub fn connected_sum(a: &ManifoldClass, b: &ManifoldClass) -> ManifoldClass {
    let mut out = ManifoldClass::new(&a.e + &b.e - 2, &a.sigma + &b.sigma);
    out.b1 = &a.b1 + &b.b1;
    out.pi1 = match (&a.pi1, &b.pi1) {
        (Pi1::Trivial, other) | (other, Pi1::Trivial) => other.clone(),
        _ => Pi1::Unknown,
    };
    out.spin = match (a.spin, b.spin) {
        (Spin::NonSpin, _) | (_, Spin::NonSpin) => Spin::NonSpin,
        (Spin::Spin, Spin::Spin) => Spin::Spin,
        _ => Spin::Unknown,
    };
    out.symplectic = false;
    out.minimal = Minimal::Unknown;
    for note in &a.provenance {
        out.provenance.push(format!("[lhs] {note}"));
    }
    for note in &b.provenance {
        out.provenance.push(format!("[rhs] {note}"));
    }
    out.provenance.push("connected_sum".to_string());

    let mut rename: BTreeMap<String, String> = BTreeMap::new();
    for s in &b.surfaces {
        if a.surface(&s.id).is_some() {
            rename.insert(s.id.clone(), format!("{}_b", s.id));
        }
    }
    let import = |s: &Surface, other_trivial: bool, rename: &BTreeMap<String, String>| {
        let mut s = s.clone();
        if let Some(new_id) = rename.get(&s.id) {
            s.id = new_id.clone();
        }
        s.intersections = s
            .intersections
            .into_iter()
            .map(|(k, v)| (rename.get(&k).cloned().unwrap_or(k), v))
            .collect();
        s.pi1_surjects &= other_trivial;
        s.complement_simply_connected &= other_trivial;
        s
    };
    let empty = BTreeMap::new();
    for s in &a.surfaces {
        out.surfaces.push(import(s, b.pi1 == Pi1::Trivial, &empty));
    }
    for s in &b.surfaces {
        out.surfaces.push(import(s, a.pi1 == Pi1::Trivial, &rename));
    }
    out
}

/// Blows up `count` points, `marks` of them on named inventory surfaces
/// (`(surface id, how many of the points lie on it)`, at distinct smooth
/// points). Each blow-up adds an exceptional sphere `excN`; marked
/// surfaces lose 1 from their square per point and meet the corresponding
/// sphere once.
pub fn blow_up(
    a: &ManifoldClass,
    marks: &[(&str, u64)],
    count: u64,
) -> Result<ManifoldClass, OpError> {
    if count == 0 || marks.iter().any(|(_, m)| *m == 0) {
        return Err(OpError::ZeroCount);
    }
    let marked: u64 = marks.iter().map(|(_, m)| m).sum();
    if marked > count {
        return Err(OpError::TooManyPoints { marked, count });
    }
    for (id, _) in marks {
        a.require_surface(id)?;
    }
    let mut out = a.clone();
    out.e += count;
    out.sigma -= count;
    out.spin = Spin::NonSpin;
    out.minimal = Minimal::Unknown;
    let mut exc = next_exc_index(&out);
    let mut described: Vec<String> = Vec::new();
    for (id, m) in marks {
        out.surface_mut(id).expect("checked above").square -= BigInt::from(*m);
        for _ in 0..*m {
            let exc_id = format!("exc{exc}");
            exc += 1;
            out.add_surface(exceptional_sphere(exc_id.clone(), a))?;
            out.record_intersection(&exc_id, id, 1)?;
        }
        described.push(format!("{m} on {id}"));
    }
    for _ in marked..count {
        let exc_id = format!("exc{exc}");
        exc += 1;
        out.add_surface(exceptional_sphere(exc_id, a))?;
    }
    if described.is_empty() {
        described.push("generic".to_string());
    }
    out.provenance.push(format!("blow_up({count}; {})", described.join(", ")));
    Ok(out)
}

/// Blows up one transverse double point of surface `id`. The proper
/// transform loses the node and 4 from its square and meets the new
/// exceptional sphere twice. Returns the new class and the sphere's id.
pub fn blow_up_node(a: &ManifoldClass, id: &str) -> Result<(ManifoldClass, String), OpError> {
    let s = a.require_surface(id)?;
    if s.nodes == 0 {
        return Err(OpError::NoNode(id.to_string()));
    }
    let mut out = a.clone();
    out.e += 1;
    out.sigma -= 1;
    out.spin = Spin::NonSpin;
    out.minimal = Minimal::Unknown;
    {
        let s = out.surface_mut(id).expect("checked above");
        s.nodes -= 1;
        s.square -= BigInt::from(4);
    }
    let exc_id = format!("exc{}", next_exc_index(&out));
    out.add_surface(exceptional_sphere(exc_id.clone(), a))?;
    out.record_intersection(&exc_id, id, 2)?;
    out.provenance.push(format!("blow_up_node({id})"));
    Ok((out, exc_id))
}

/// Symplectically resolves `k` of the recorded intersection points of two
/// symplectic inventory surfaces into a single surface `new_id` of genus
/// `g1 + g2 + k - 1` and square `s1 + s2 + 2k`; unresolved intersections
/// survive as nodes. The ambient manifold is untouched.
pub fn resolve(
    a: &ManifoldClass,
    id1: &str,
    id2: &str,
    k: u64,
    new_id: &str,
) -> Result<ManifoldClass, OpError> {
    if k == 0 {
        return Err(OpError::ZeroCount);
    }
    if id1 == id2 {
        return Err(OpError::SelfPairing(id1.to_string()));
    }
    let s1 = a.require_surface(id1)?;
    let s2 = a.require_surface(id2)?;
    for s in [s1, s2] {
        if s.kind != SurfaceKind::Symplectic {
            return Err(OpError::NotSymplecticKind(s.id.clone()));
        }
    }
    let have = s1.meets(id2);
    if have < k {
        return Err(OpError::InsufficientIntersections { have, need: k });
    }
    if a.surface(new_id).is_some() && new_id != id1 && new_id != id2 {
        return Err(OpError::DuplicateSurface(new_id.to_string()));
    }
    let merged = Surface {
        id: new_id.to_string(),
        genus: &s1.genus + &s2.genus + k - 1u64,
        square: &s1.square + &s2.square + BigInt::from(2 * k),
        kind: SurfaceKind::Symplectic,
        pi1_surjects: s1.pi1_surjects || s2.pi1_surjects,
        complement_simply_connected: false,
        symplectic_embeddable: a.symplectic,
        nodes: s1.nodes + s2.nodes + (have - k),
        intersections: BTreeMap::new(),
    };
    let mut out = a.clone();
    // Third parties meet the resolved surface in the union of the old
    // intersection points.
    let third_party: Vec<(String, u64)> = out
        .surfaces
        .iter()
        .filter(|t| t.id != id1 && t.id != id2)
        .map(|t| (t.id.clone(), t.meets(id1) + t.meets(id2)))
        .filter(|(_, n)| *n > 0)
        .collect();
    out.drop_surface(id1);
    out.drop_surface(id2);
    out.add_surface(merged)?;
    for (t, n) in third_party {
        out.record_intersection(new_id, &t, n)?;
    }
    out.provenance.push(format!("resolve({id1}, {id2}, k={k}) -> {new_id}"));
    Ok(out)
}

fn import_after_sum(s: &Surface, rename: &BTreeMap<String, String>) -> Surface {
    let mut s = s.clone();
    if let Some(new_id) = rename.get(&s.id) {
        s.id = new_id.clone();
    }
    s.intersections = s
        .intersections
        .iter()
        .map(|(k, v)| (rename.get(k).cloned().unwrap_or_else(|| k.clone()), *v))
        .collect();
    s.pi1_surjects = false;
    s.complement_simply_connected = false;
    s
}

/// Symplectic fiber sum along embedded symplectic surfaces of equal genus
/// and opposite squares. The gluing surfaces are consumed; inventory
/// surfaces disjoint from them descend with demoted fundamental-group
/// flags. `usher_minimal` asserts that the standard minimality criterion
/// for fiber sums applies.
pub fn symplectic_sum(
    a: &ManifoldClass,
    sa: &str,
    b: &ManifoldClass,
    sb: &str,
    usher_minimal: bool,
) -> Result<ManifoldClass, OpError> {
    let fa = a.require_surface(sa)?;
    let fb = b.require_surface(sb)?;
    for f in [fa, fb] {
        if f.kind != SurfaceKind::Symplectic {
            return Err(OpError::NotSymplecticKind(f.id.clone()));
        }
        if f.nodes > 0 {
            return Err(OpError::NodalSurface(f.id.clone()));
        }
    }
    if !a.symplectic || !b.symplectic {
        return Err(OpError::AmbientNotSymplectic);
    }
    if fa.genus != fb.genus {
        return Err(OpError::GenusMismatch);
    }
    if !(&fa.square + &fb.square).is_zero() {
        return Err(OpError::SquaresNotOpposite);
    }
    let g = fa.genus.clone();
    let mut out = ManifoldClass::new(
        &a.e + &b.e + BigInt::from(4) * &g - 4,
        &a.sigma + &b.sigma,
    );
    out.symplectic = true;
    out.minimal = if usher_minimal { Minimal::Yes } else { Minimal::Unknown };
    let trivializes = (fa.complement_simply_connected && fb.pi1_surjects)
        || (fb.complement_simply_connected && fa.pi1_surjects);
    out.pi1 = if trivializes { Pi1::Trivial } else { Pi1::Unknown };
    out.spin = Spin::Unknown;
    for note in &a.provenance {
        out.provenance.push(format!("[lhs] {note}"));
    }
    for note in &b.provenance {
        out.provenance.push(format!("[rhs] {note}"));
    }
    out.provenance.push(format!(
        "symplectic_sum(along {sa} ~ {sb}, genus {g}, usher={usher_minimal})"
    ));

    // Only surfaces disjoint from the gluing locus descend.
    let keep_a: Vec<&Surface> =
        a.surfaces.iter().filter(|s| s.id != sa && s.meets(sa) == 0).collect();
    let keep_b: Vec<&Surface> =
        b.surfaces.iter().filter(|s| s.id != sb && s.meets(sb) == 0).collect();
    let mut rename: BTreeMap<String, String> = BTreeMap::new();
    for s in &keep_b {
        if keep_a.iter().any(|t| t.id == s.id) {
            rename.insert(s.id.clone(), format!("{}_b", s.id));
        }
    }
    let empty = BTreeMap::new();
    for s in keep_a {
        let mut s = import_after_sum(s, &empty);
        s.intersections.remove(sa);
        out.surfaces.push(s);
    }
    for s in keep_b {
        let mut s = import_after_sum(s, &rename);
        s.intersections.remove(sb);
        out.surfaces.push(s);
    }
    out.normalize();
    Ok(out)
}

fn check_lagrangian_torus(s: &Surface) -> Result<(), OpError> {
    let is_torus = s.genus == BigInt::from(1) && s.square.is_zero() && s.nodes == 0;
    if !is_torus || s.kind != SurfaceKind::Lagrangian {
        return Err(OpError::NotLagrangianTorus(s.id.clone()));
    }
    Ok(())
}

/// Shared body of the two torus surgeries. `stays_symplectic` marks the
/// coefficients for which the operation is a symplectic one.
fn torus_surgery_impl(
    a: &ManifoldClass,
    torus: &str,
    coeff: i64,
    stays_symplectic: bool,
    op: &str,
) -> Result<ManifoldClass, OpError> {
    if coeff == 0 {
        return Err(OpError::ZeroCoefficient);
    }
    let t = a.require_surface(torus)?;
    check_lagrangian_torus(t)?;
    if !a.symplectic {
        return Err(OpError::AmbientNotSymplectic);
    }
    let complement_sc = t.complement_simply_connected;
    let mut out = a.clone();
    out.symplectic = stays_symplectic;
    out.minimal = if stays_symplectic { a.minimal } else { Minimal::Unknown };
    out.spin = Spin::Unknown;
    if complement_sc {
        out.pi1 = Pi1::Trivial;
        out.b1 = BigInt::zero();
    } else {
        out.pi1 = Pi1::Unknown;
    }
    // Surgery happens inside a neighborhood of the torus: surfaces meeting
    // it are destroyed, the torus itself survives as the core torus, and
    // everything else keeps its topology but loses complement knowledge.
    let doomed: Vec<String> = out
        .surfaces
        .iter()
        .filter(|s| s.id != torus && s.meets(torus) > 0)
        .map(|s| s.id.clone())
        .collect();
    for id in doomed {
        out.drop_surface(&id);
    }
    for s in &mut out.surfaces {
        if s.id != torus {
            s.pi1_surjects = false;
            s.complement_simply_connected = false;
        }
    }
    out.provenance.push(format!("{op}({torus}, 1/{coeff})"));
    out.normalize();
    Ok(out)
}

/// Luttinger surgery with coefficient `1/n` on a Lagrangian square zero
/// torus; preserves `e`, `sigma`, symplecticity, and minimality.
pub fn luttinger(a: &ManifoldClass, torus: &str, n: i64) -> Result<ManifoldClass, OpError> {
    torus_surgery_impl(a, torus, n, true, "luttinger")
}

/// General torus surgery with coefficient `1/m`; for `|m| = 1` this is a
/// Luttinger surgery, otherwise the result is not known to be symplectic.
pub fn torus_surgery(a: &ManifoldClass, torus: &str, m: i64) -> Result<ManifoldClass, OpError> {
    torus_surgery_impl(a, torus, m, m.unsigned_abs() == 1, "torus_surgery")
}

/// Knot surgery on a square zero torus marked symplectically embeddable.
/// Homology (`e`, `sigma`, `b1`) is always preserved; the fundamental
/// group and spin status survive only when the torus complement is simply
/// connected, which also pins the homeomorphism type.
pub fn knot_surgery(a: &ManifoldClass, torus: &str, knot: &str) -> Result<ManifoldClass, OpError> {
    let t = a.require_surface(torus)?;
    if t.genus != BigInt::from(1) || !t.square.is_zero() || t.nodes > 0 {
        return Err(OpError::NotSquareZeroTorus(torus.to_string()));
    }
    if !t.symplectic_embeddable {
        return Err(OpError::NotSymplecticallyEmbeddable(torus.to_string()));
    }
    let complement_sc = t.complement_simply_connected;
    let mut out = a.clone();
    out.symplectic = false;
    out.minimal = Minimal::Unknown;
    if !complement_sc {
        out.pi1 = Pi1::Unknown;
        out.spin = Spin::Unknown;
    }
    let doomed: Vec<String> = out
        .surfaces
        .iter()
        .filter(|s| s.meets(torus) > 0)
        .map(|s| s.id.clone())
        .collect();
    for id in doomed {
        out.drop_surface(&id);
    }
    out.drop_surface(torus);
    for s in &mut out.surfaces {
        s.pi1_surjects = false;
        s.complement_simply_connected = false;
    }
    out.provenance.push(format!("knot_surgery({torus}, \"{knot}\")"));
    out.normalize();
    Ok(out)
}

/// Standard simply connected model of the manifold: `p CP2 # q mCP2`.
/// Refuses unless the fundamental group is established trivial and the
/// intersection form is established odd (non-spin).
pub fn classify_homeo(a: &ManifoldClass) -> Result<StandardForm, OpError> {
    if a.pi1 != Pi1::Trivial {
        return Err(OpError::ClassifyRefused(
            "fundamental group not established trivial".to_string(),
        ));
    }
    match a.spin {
        Spin::NonSpin => {}
        _ => {
            return Err(OpError::ClassifyRefused(
                "intersection form not established odd".to_string(),
            ))
        }
    }
    let b2 = a.b2().expect("pi1 trivial implies b2 is available");
    if (&b2 + &a.sigma).is_odd() {
        return Err(OpError::ClassifyRefused(
            "b2 and sigma have different parity".to_string(),
        ));
    }
    let two = BigInt::from(2);
    let p = (&b2 + &a.sigma).div_floor(&two);
    let q = (&b2 - &a.sigma).div_floor(&two);
    if p.is_negative() || q.is_negative() || (p.is_zero() && q.is_zero()) {
        return Err(OpError::ClassifyRefused(format!(
            "no odd standard form with b2 = {b2} and sigma = {}",
            a.sigma
        )));
    }
    Ok(StandardForm { p, q, parity: Parity::Odd })
}

/// Compares `c1^2` with `9 chi_h`.
pub fn bmy_check(a: &ManifoldClass) -> Result<BmyStatus, OpError> {
    let chi = a.chi_h().ok_or(OpError::NonIntegralChi)?;
    let c1 = a.c1_sq();
    let bound = BigInt::from(9) * chi;
    Ok(match c1.cmp(&bound) {
        std::cmp::Ordering::Equal => BmyStatus::OnLine,
        std::cmp::Ordering::Less => BmyStatus::Below,
        std::cmp::Ordering::Greater => BmyStatus::Violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn symplectic_base(e: i64, sigma: i64) -> ManifoldClass {
        ManifoldClass::new(e, sigma).with_symplectic(true)
    }

    fn gluing_surface(id: &str, genus: i64, square: i64) -> Surface {
        Surface::new(id, genus, square, SurfaceKind::Symplectic)
            .with_pi1_surjects(true)
            .with_complement_simply_connected(true)
    }

    #[test]
    fn connected_sum_arithmetic() {
        let a = ManifoldClass::new(3, 1).with_pi1(Pi1::Trivial).with_spin(Spin::NonSpin);
        let b = ManifoldClass::new(3, -1).with_pi1(Pi1::Trivial).with_spin(Spin::NonSpin);
        let s = connected_sum(&a, &b);
        assert_eq!(s.e(), &bi(4));
        assert_eq!(s.sigma(), &bi(0));
        assert_eq!(s.pi1(), &Pi1::Trivial);
        assert_eq!(s.spin(), Spin::NonSpin);
        assert!(!s.is_symplectic());
    }

    #[test]
    fn classify_small_connected_sum() {
        let m = ManifoldClass::new(4, 0).with_pi1(Pi1::Trivial).with_spin(Spin::NonSpin);
        let f = classify_homeo(&m).unwrap();
        assert_eq!((f.p, f.q), (bi(1), bi(1)));
    }

    #[test]
    fn classify_refuses_without_pi1_or_odd_form() {
        let m = ManifoldClass::new(4, 0).with_spin(Spin::NonSpin);
        assert!(matches!(classify_homeo(&m), Err(OpError::ClassifyRefused(_))));
        let m = ManifoldClass::new(4, 0).with_pi1(Pi1::Trivial);
        assert!(matches!(classify_homeo(&m), Err(OpError::ClassifyRefused(_))));
    }

    #[test]
    fn blow_up_moves_invariants_and_tracks_surfaces() {
        let mut m = symplectic_base(12, 4).with_pi1(Pi1::Trivial);
        m.add_surface(gluing_surface("S", 2, 3)).unwrap();
        let up = blow_up(&m, &[("S", 2)], 3).unwrap();
        assert_eq!(up.e(), &bi(15));
        assert_eq!(up.sigma(), &bi(1));
        assert_eq!(up.spin(), Spin::NonSpin);
        assert!(up.is_symplectic());
        assert_eq!(up.surface("S").unwrap().square(), &bi(1));
        assert_eq!(up.surface("exc1").unwrap().meets("S"), 1);
        assert_eq!(up.surface("exc2").unwrap().meets("S"), 1);
        assert_eq!(up.surface("exc3").unwrap().meets("S"), 0);
        assert_eq!(up.c1_sq(), m.c1_sq() - 3);
    }

    #[test]
    fn blow_up_validates_counts() {
        let m = symplectic_base(4, 0);
        assert_eq!(blow_up(&m, &[], 0), Err(OpError::ZeroCount));
        let mut m = m;
        m.add_surface(gluing_surface("S", 1, 0)).unwrap();
        assert_eq!(
            blow_up(&m, &[("S", 3)], 2),
            Err(OpError::TooManyPoints { marked: 3, count: 2 })
        );
        assert!(matches!(blow_up(&m, &[("T", 1)], 1), Err(OpError::UnknownSurface(_))));
    }

    #[test]
    fn node_blow_up_then_full_resolution() {
        // A genus 4 square -1 surface with one node turns into an embedded
        // genus 5 square -2 surface after one nodal blow-up and a double
        // resolution with the exceptional sphere.
        let mut m = symplectic_base(12, 4);
        m.add_surface(
            Surface::new("E", 4, -1, SurfaceKind::Symplectic).with_nodes(1),
        )
        .unwrap();
        let (m1, exc) = blow_up_node(&m, "E").unwrap();
        assert_eq!(m1.e(), &bi(13));
        assert_eq!(m1.sigma(), &bi(3));
        let e = m1.surface("E").unwrap();
        assert_eq!(e.nodes(), 0);
        assert_eq!(e.square(), &bi(-5));
        assert_eq!(e.meets(&exc), 2);
        let m2 = resolve(&m1, "E", &exc, 2, "Sigma5").unwrap();
        let s = m2.surface("Sigma5").unwrap();
        assert_eq!(s.genus(), &bi(5));
        assert_eq!(s.square(), &bi(-2));
        assert_eq!(s.nodes(), 0);
        assert_eq!(m2.e(), m1.e());
        assert_eq!(m2.sigma(), m1.sigma());
    }

    #[test]
    fn resolve_checks_intersections_and_kind() {
        let mut m = symplectic_base(4, 0);
        m.add_surface(gluing_surface("A", 1, 0)).unwrap();
        m.add_surface(gluing_surface("B", 1, 0)).unwrap();
        assert_eq!(
            resolve(&m, "A", "B", 1, "C"),
            Err(OpError::InsufficientIntersections { have: 0, need: 1 })
        );
        m.record_intersection("A", "B", 2).unwrap();
        let r = resolve(&m, "A", "B", 1, "C").unwrap();
        let c = r.surface("C").unwrap();
        assert_eq!(c.genus(), &bi(2));
        assert_eq!(c.square(), &bi(2));
        assert_eq!(c.nodes(), 1);
        let full = resolve(&m, "A", "B", 2, "C").unwrap();
        assert_eq!(full.surface("C").unwrap().genus(), &bi(3));
        assert_eq!(full.surface("C").unwrap().nodes(), 0);
    }

    #[test]
    fn resolve_accumulates_third_party_intersections() {
        let mut m = symplectic_base(4, 0);
        m.add_surface(gluing_surface("A", 1, 0)).unwrap();
        m.add_surface(gluing_surface("B", 1, 0)).unwrap();
        m.add_surface(gluing_surface("T", 2, 0)).unwrap();
        m.record_intersection("A", "B", 1).unwrap();
        m.record_intersection("A", "T", 1).unwrap();
        m.record_intersection("B", "T", 2).unwrap();
        let r = resolve(&m, "A", "B", 1, "C").unwrap();
        assert_eq!(r.surface("C").unwrap().meets("T"), 3);
        assert_eq!(r.surface("T").unwrap().meets("C"), 3);
    }

    #[test]
    fn symplectic_sum_arithmetic_and_pi1() {
        let mut a = symplectic_base(12, 4);
        a.add_surface(gluing_surface("F", 2, 1)).unwrap();
        let mut b = symplectic_base(10, -2);
        b.add_surface(gluing_surface("G", 2, -1)).unwrap();
        let s = symplectic_sum(&a, "F", &b, "G", true).unwrap();
        assert_eq!(s.e(), &bi(12 + 10 + 8 - 4));
        assert_eq!(s.sigma(), &bi(2));
        assert_eq!(s.pi1(), &Pi1::Trivial);
        assert_eq!(s.minimal(), Minimal::Yes);
        assert!(s.is_symplectic());
        // sigma = 2 is not divisible by 8, so normalization settles spin.
        assert_eq!(s.spin(), Spin::NonSpin);
    }

    #[test]
    fn symplectic_sum_pi1_needs_both_flags() {
        let mut a = symplectic_base(12, 4);
        a.add_surface(
            Surface::new("F", 2, 1, SurfaceKind::Symplectic).with_complement_simply_connected(true),
        )
        .unwrap();
        let mut b = symplectic_base(10, -2);
        b.add_surface(Surface::new("G", 2, -1, SurfaceKind::Symplectic)).unwrap();
        let s = symplectic_sum(&a, "F", &b, "G", false).unwrap();
        assert_eq!(s.pi1(), &Pi1::Unknown);
        assert_eq!(s.minimal(), Minimal::Unknown);
    }

    #[test]
    fn symplectic_sum_validates_gluing_data() {
        let mut a = symplectic_base(12, 4);
        a.add_surface(gluing_surface("F", 2, 1)).unwrap();
        let mut b = symplectic_base(10, -2);
        b.add_surface(gluing_surface("G", 3, -1)).unwrap();
        assert_eq!(symplectic_sum(&a, "F", &b, "G", false), Err(OpError::GenusMismatch));
        let mut b = symplectic_base(10, -2);
        b.add_surface(gluing_surface("G", 2, 1)).unwrap();
        assert_eq!(symplectic_sum(&a, "F", &b, "G", false), Err(OpError::SquaresNotOpposite));
        let mut c = ManifoldClass::new(10, -2);
        c.add_surface(gluing_surface("G", 2, -1)).unwrap();
        assert_eq!(symplectic_sum(&a, "F", &c, "G", false), Err(OpError::AmbientNotSymplectic));
    }

    #[test]
    fn sum_descends_only_disjoint_surfaces() {
        let mut a = symplectic_base(12, 4);
        a.add_surface(gluing_surface("F", 2, 0)).unwrap();
        a.add_surface(gluing_surface("near", 1, 0)).unwrap();
        a.add_surface(gluing_surface("far", 1, 0)).unwrap();
        a.record_intersection("F", "near", 1).unwrap();
        let mut b = symplectic_base(10, -4);
        b.add_surface(Surface::new("G", 2, 0, SurfaceKind::Symplectic)).unwrap();
        b.add_surface(gluing_surface("far", 3, 0)).unwrap();
        let s = symplectic_sum(&a, "F", &b, "G", false).unwrap();
        assert_eq!(s.pi1(), &Pi1::Unknown);
        assert!(s.surface("F").is_none());
        assert!(s.surface("near").is_none());
        let far = s.surface("far").unwrap();
        assert_eq!(far.genus(), &bi(1));
        assert!(!far.pi1_surjects());
        assert!(!far.complement_simply_connected());
        assert_eq!(s.surface("far_b").unwrap().genus(), &bi(3));
    }

    #[test]
    fn chi_h_two_path_consistency() {
        let mut a = symplectic_base(12, 4);
        a.add_surface(gluing_surface("F", 3, 2)).unwrap();
        let mut b = symplectic_base(8, -4);
        b.add_surface(gluing_surface("G", 3, -2)).unwrap();
        let s = symplectic_sum(&a, "F", &b, "G", false).unwrap();
        let direct = s.chi_h().unwrap();
        let additive = a.chi_h().unwrap() + b.chi_h().unwrap() + (bi(3) - 1);
        assert_eq!(direct, additive);
    }

    #[test]
    fn luttinger_preserves_ambient_invariants() {
        let mut m = symplectic_base(4, 0).with_minimal(Minimal::Yes);
        m.add_surface(
            Surface::new("T", 1, 0, SurfaceKind::Lagrangian)
                .with_complement_simply_connected(true),
        )
        .unwrap();
        m.add_surface(gluing_surface("S", 2, 0)).unwrap();
        m.record_intersection("T", "S", 1).unwrap();
        let out = luttinger(&m, "T", -1).unwrap();
        assert_eq!(out.e(), m.e());
        assert_eq!(out.sigma(), m.sigma());
        assert!(out.is_symplectic());
        assert_eq!(out.minimal(), Minimal::Yes);
        assert_eq!(out.pi1(), &Pi1::Trivial);
        assert!(out.surface("T").is_some());
        assert!(out.surface("S").is_none(), "surfaces meeting the torus are destroyed");
    }

    #[test]
    fn torus_surgery_large_coefficient_leaves_symplectic_world() {
        let mut m = symplectic_base(4, 0);
        m.add_surface(Surface::new("T", 1, 0, SurfaceKind::Lagrangian)).unwrap();
        let out = torus_surgery(&m, "T", 3).unwrap();
        assert!(!out.is_symplectic());
        assert_eq!(out.pi1(), &Pi1::Unknown);
        assert_eq!(torus_surgery(&m, "T", 0), Err(OpError::ZeroCoefficient));
        let pm_one = torus_surgery(&m, "T", -1).unwrap();
        assert!(pm_one.is_symplectic());
    }

    #[test]
    fn surgery_requires_lagrangian_square_zero_torus() {
        let mut m = symplectic_base(4, 0);
        m.add_surface(gluing_surface("S", 1, 0)).unwrap();
        assert!(matches!(luttinger(&m, "S", 1), Err(OpError::NotLagrangianTorus(_))));
    }

    #[test]
    fn knot_surgery_keeps_homology_and_needs_license() {
        let mut m = symplectic_base(112, 12).with_pi1(Pi1::Trivial).with_spin(Spin::NonSpin);
        m.add_surface(
            Surface::new("T1", 1, 0, SurfaceKind::Lagrangian)
                .with_complement_simply_connected(true)
                .with_symplectic_embeddable(true),
        )
        .unwrap();
        let out = knot_surgery(&m, "T1", "trefoil").unwrap();
        assert_eq!(out.e(), &bi(112));
        assert_eq!(out.sigma(), &bi(12));
        assert_eq!(out.pi1(), &Pi1::Trivial);
        assert_eq!(out.spin(), Spin::NonSpin);
        assert!(!out.is_symplectic());
        assert!(out.surface("T1").is_none(), "the torus is consumed");

        let mut unlicensed = symplectic_base(4, 0);
        unlicensed.add_surface(Surface::new("T", 1, 0, SurfaceKind::Lagrangian)).unwrap();
        assert!(matches!(
            knot_surgery(&unlicensed, "T", "trefoil"),
            Err(OpError::NotSymplecticallyEmbeddable(_))
        ));
    }

    #[test]
    fn knot_surgery_without_complement_knowledge_degrades() {
        let mut m = symplectic_base(4, 0).with_pi1(Pi1::Trivial).with_spin(Spin::NonSpin);
        m.add_surface(
            Surface::new("T", 1, 0, SurfaceKind::Lagrangian).with_symplectic_embeddable(true),
        )
        .unwrap();
        let out = knot_surgery(&m, "T", "figure8").unwrap();
        assert_eq!(out.pi1(), &Pi1::Unknown);
    }

    #[test]
    fn normalization_rules() {
        let mut m = ManifoldClass::new(5, 1);
        m.normalize();
        assert_eq!(m.spin(), Spin::NonSpin);

        let mut m = ManifoldClass::new(4, 0);
        m.add_surface(Surface::new("S", 1, 3, SurfaceKind::Symplectic)).unwrap();
        m.normalize();
        assert_eq!(m.spin(), Spin::NonSpin);

        let mut m = ManifoldClass::new(4, 0);
        m.add_surface(Surface::new("S", 1, 2, SurfaceKind::Symplectic)).unwrap();
        m.normalize();
        assert_eq!(m.spin(), Spin::Unknown);

        let mut m = ManifoldClass::new(4, 8).with_spin(Spin::Spin);
        m.normalize();
        assert_eq!(m.spin(), Spin::Spin, "normalize never touches settled status");
    }

    #[test]
    fn citations_upgrade_but_never_contradict() {
        let mut m = ManifoldClass::new(4, 0);
        m.cite_simply_connected("ref a").unwrap();
        assert_eq!(m.pi1(), &Pi1::Trivial);
        assert!(m.cite_pi1(Pi1::Z2, "ref b").is_err());
        m.cite_nonspin("ref c").unwrap();
        assert_eq!(m.spin(), Spin::NonSpin);
        let mut spin = ManifoldClass::new(4, 0).with_spin(Spin::Spin);
        assert!(spin.cite_nonspin("ref d").is_err());
    }

    #[test]
    fn chi_h_and_b2_gates() {
        let m = ManifoldClass::new(5, 1);
        assert!(m.chi_h().is_none());
        assert_eq!(ManifoldClass::new(4, 0).chi_h(), Some(bi(1)));
        assert!(ManifoldClass::new(4, 0).b2().is_none());
        assert_eq!(ManifoldClass::new(4, 0).with_pi1(Pi1::Trivial).b2(), Some(bi(2)));
        assert_eq!(ManifoldClass::new(4, 0).with_pi1(Pi1::Z2).b2(), Some(bi(2)));
    }

    #[test]
    fn bmy_comparison() {
        assert_eq!(bmy_check(&ManifoldClass::new(48, 16)).unwrap(), BmyStatus::OnLine);
        assert_eq!(bmy_check(&ManifoldClass::new(36, 0)).unwrap(), BmyStatus::Below);
        assert_eq!(bmy_check(&ManifoldClass::new(2, 2)).unwrap(), BmyStatus::Violated);
        assert_eq!(bmy_check(&ManifoldClass::new(5, 1)), Err(OpError::NonIntegralChi));
    }

    #[test]
    fn c1_sq_is_recomputed() {
        let m = ManifoldClass::new(48, 16);
        assert_eq!(m.c1_sq(), bi(144));
        assert_eq!(m.chi_h(), Some(bi(16)));
    }

    #[test]
    fn standard_form_display() {
        let f = StandardForm { p: bi(61), q: bi(49), parity: Parity::Odd };
        assert_eq!(f.to_string(), "61 CP2 # 49 mCP2");
    }
}
