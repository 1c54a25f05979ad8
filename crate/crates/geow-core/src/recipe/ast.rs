//! Syntax tree for recipe files.

/// A parsed recipe: an ordered list of statements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Recipe {
    pub statements: Vec<Stmt>,
}

/// One statement with its source line. Equality ignores the line, so two
/// parses of differently laid out but identical recipes compare equal.
#[derive(Debug, Clone)]
pub struct Stmt {
    pub line: usize,
    pub kind: StmtKind,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Let { name: String, expr: Expr },
    Assert(Assertion),
}

/// Expressions: block or operation calls, with optional surface
/// projections (`expr.S`) on the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Call { name: String, args: Vec<Arg> },
    Project { base: Box<Expr>, field: String },
}

/// Call arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Int(i64),
    Str(String),
    /// Bare identifier: a bound manifold or a keyword such as `minimal`.
    Name(String),
    /// `M.S`: surface `S` of the bound manifold `M`.
    Selector { owner: String, surface: String },
    /// `key=value`, used for blow-up marks.
    KeyVal { key: String, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assertion {
    /// `invariants(M, e=.., sigma=.., c1sq=.., chi=..)`; every listed
    /// value is recomputed.
    Invariants { target: String, checks: Vec<(InvKey, i64)> },
    /// `homeo(M, p CP2 # q mCP2)`.
    Homeo { target: String, p: i64, q: i64 },
    /// `homeo_refused(M)`: classification must fail.
    HomeoRefused { target: String },
    /// `bmy(M, on_line|below|violated)`.
    Bmy { target: String, status: BmyWord },
    /// `simply_connected(M) by "tag"`: citation upgrading pi1.
    SimplyConnected { target: String, tag: String },
    /// `nonspin(M) by "tag"`: citation fixing the spin status.
    NonSpin { target: String, tag: String },
    /// `pi1(M, trivial|z2) by "tag"`: citation for the fundamental group.
    Pi1Is { target: String, claim: Pi1Word, tag: String },
    /// `h1_trivial(ref)`: the referenced presentation abelianizes to 0.
    H1Trivial { reference: String },
    /// `surface(M.S, genus=.., square=.., nodes=..)`.
    SurfaceShape { owner: String, surface: String, checks: Vec<(SurfKey, i64)> },
    /// `minimal(M)`: minimality must be established.
    MinimalYes { target: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvKey {
    E,
    Sigma,
    C1Sq,
    Chi,
}

impl InvKey {
    pub fn name(self) -> &'static str {
        match self {
            InvKey::E => "e",
            InvKey::Sigma => "sigma",
            InvKey::C1Sq => "c1sq",
            InvKey::Chi => "chi",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "e" => Some(InvKey::E),
            "sigma" => Some(InvKey::Sigma),
            "c1sq" => Some(InvKey::C1Sq),
            "chi" => Some(InvKey::Chi),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfKey {
    Genus,
    Square,
    Nodes,
}

impl SurfKey {
    pub fn name(self) -> &'static str {
        match self {
            SurfKey::Genus => "genus",
            SurfKey::Square => "square",
            SurfKey::Nodes => "nodes",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "genus" => Some(SurfKey::Genus),
            "square" => Some(SurfKey::Square),
            "nodes" => Some(SurfKey::Nodes),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BmyWord {
    OnLine,
    Below,
    Violated,
}

impl BmyWord {
    pub fn name(self) -> &'static str {
        match self {
            BmyWord::OnLine => "on_line",
            BmyWord::Below => "below",
            BmyWord::Violated => "violated",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "on_line" => Some(BmyWord::OnLine),
            "below" => Some(BmyWord::Below),
            "violated" => Some(BmyWord::Violated),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pi1Word {
    Trivial,
    Z2,
}

impl Pi1Word {
    pub fn name(self) -> &'static str {
        match self {
            Pi1Word::Trivial => "trivial",
            Pi1Word::Z2 => "z2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "trivial" => Some(Pi1Word::Trivial),
            "z2" => Some(Pi1Word::Z2),
            _ => None,
        }
    }
}
