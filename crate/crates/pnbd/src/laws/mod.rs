//! The law registry: every checked statement, its case shape and checker.

mod closure;
mod conjecture;
mod morphism;
mod system;

use std::fmt::Write as _;

use pnbd_core::closure::closure;
use pnbd_core::{Context, Elem, Morphism, PreNbdSystem, Verdict};

use crate::error::{CliError, Result};
use crate::instance::Instance;

/// One instance a law is evaluated on.
#[derive(Clone, Debug)]
pub enum Case {
    Space(PreNbdSystem),
    /// Two systems on the same object; the second doubles as an endomap.
    Pair(PreNbdSystem, PreNbdSystem),
    Map(Morphism),
    Mor {
        f: Morphism,
        mu: PreNbdSystem,
        phi: PreNbdSystem,
    },
    /// `f: (X,mu) → (Y,phi)` followed by `g: (Y,phi) → (Z,psi)`.
    Compose {
        f: Morphism,
        g: Morphism,
        mu: PreNbdSystem,
        phi: PreNbdSystem,
        psi: PreNbdSystem,
    },
    Product(Vec<PreNbdSystem>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Space,
    Pair,
    Map,
    Mor,
    Compose,
    Product,
}

impl Shape {
    pub const ALL: [Shape; 6] = [Shape::Space, Shape::Pair, Shape::Map, Shape::Mor, Shape::Compose, Shape::Product];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Space => "space",
            Shape::Pair => "pair",
            Shape::Map => "map",
            Shape::Mor => "morphism",
            Shape::Compose => "compose",
            Shape::Product => "product",
        }
    }
}

impl Case {
    pub fn shape(&self) -> Shape {
        match self {
            Case::Space(_) => Shape::Space,
            Case::Pair(..) => Shape::Pair,
            Case::Map(_) => Shape::Map,
            Case::Mor { .. } => Shape::Mor,
            Case::Compose { .. } => Shape::Compose,
            Case::Product(_) => Shape::Product,
        }
    }

    pub fn context(&self) -> Context {
        match self {
            Case::Space(s) | Case::Pair(s, _) => s.object().context(),
            Case::Map(f) | Case::Mor { f, .. } | Case::Compose { f, .. } => f.dom().context(),
            Case::Product(v) => v[0].object().context(),
        }
    }

    /// The case as a standalone instance file, for replay.
    pub fn to_instance(&self) -> Instance {
        let mut inst = Instance::new(self.context());
        match self {
            Case::Space(s) => {
                inst.add_system("mu", s);
            }
            Case::Pair(a, b) => {
                inst.add_system("mu", a);
                inst.add_system("nu", b);
            }
            Case::Map(f) => {
                inst.add_morphism("f", f);
            }
            Case::Mor { f, mu, phi } => {
                inst.add_morphism("f", f);
                inst.add_system("mu", mu);
                inst.add_system("phi", phi);
            }
            Case::Compose { f, g, mu, phi, psi } => {
                inst.add_morphism("f", f);
                inst.add_morphism("g", g);
                inst.add_system("mu", mu);
                inst.add_system("phi", phi);
                inst.add_system("psi", psi);
            }
            Case::Product(v) => {
                for (i, s) in v.iter().enumerate() {
                    inst.add_system(&format!("mu{i}"), s);
                }
            }
        }
        inst
    }

    /// One-line description: systems as generator tables, maps as graphs.
    pub fn describe(&self) -> String {
        match self {
            Case::Space(s) => s.describe(),
            Case::Pair(a, b) => format!("mu = {}; nu = {}", a.describe(), b.describe()),
            Case::Map(f) => describe_map(f),
            Case::Mor { f, mu, phi } => {
                format!("f = {}; mu = {}; phi = {}", describe_map(f), mu.describe(), phi.describe())
            }
            Case::Compose { f, g, mu, phi, psi } => format!(
                "f = {}; g = {}; mu = {}; phi = {}; psi = {}",
                describe_map(f),
                describe_map(g),
                mu.describe(),
                phi.describe(),
                psi.describe()
            ),
            Case::Product(v) => v.iter().map(|s| s.describe()).collect::<Vec<_>>().join(" × "),
        }
    }
}

pub fn describe_map(f: &Morphism) -> String {
    let (dl, cl) = (f.dom().point_labels(), f.cod().point_labels());
    let parts: Vec<String> = (0..f.dom().size()).map(|i| format!("{}->{}", dl[i], cl[f.at(i)])).collect();
    format!("{} => {} {{{}}}", f.dom().describe(), f.cod().describe(), parts.join(", "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Skip {
    /// The lattice has a single subobject.
    Degenerate,
    /// The top subobject is not closed and the statement needs it to be.
    TopDegenerate,
    /// A premise holds only up to the probe bound and the conclusion fails.
    Bounded,
    /// The statement uses the map to the terminal space, which needs a
    /// grounded system.
    NonGrounded,
    /// The time budget ran out before the case was evaluated.
    Budget,
}

impl Skip {
    pub fn reason(self) -> &'static str {
        match self {
            Skip::Degenerate => "degenerate",
            Skip::TopDegenerate => "top-degenerate",
            Skip::Bounded => "bounded-inconclusive",
            Skip::NonGrounded => "non-grounded",
            Skip::Budget => "budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(Skip),
    /// The hypotheses of the statement are not met.
    NotApplicable(&'static str),
    /// A recorded mismatch for a law whose statement is known not to hold
    /// in general.
    Finding(String),
    /// The case exhibits the witness an expected-witness law looks for.
    Witness(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    Theorem,
    /// Mismatches are recorded as findings, not failures.
    Finding,
    /// An open statement; a failure is a counterexample.
    Conjecture,
    /// Must hold in reflecting-zero contexts and must have a witness
    /// elsewhere.
    ExpectedWitness,
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::Theorem => "theorem",
            LawKind::Finding => "finding",
            LawKind::Conjecture => "conjecture",
            LawKind::ExpectedWitness => "expected-witness",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LawCtx {
    pub probe_bound: u32,
}

impl Default for LawCtx {
    fn default() -> Self {
        LawCtx { probe_bound: pnbd_core::classify::DEFAULT_PROBE_BOUND }
    }
}

pub type Checker = fn(&Case, &LawCtx) -> pnbd_core::Result<Outcome>;

pub struct Law {
    pub id: &'static str,
    pub kind: LawKind,
    pub shape: Shape,
    pub statement: &'static str,
    pub check: Checker,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law").field("id", &self.id).field("shape", &self.shape).finish()
    }
}

impl Law {
    /// Runs the checker; errors from the core become failures so they are
    /// never silently dropped.
    pub fn evaluate(&self, case: &Case, ctx: &LawCtx) -> Outcome {
        if case.shape() != self.shape {
            return Outcome::NotApplicable("wrong case shape");
        }
        match (self.check)(case, ctx) {
            Ok(Outcome::Fail(d)) if self.kind == LawKind::Finding => Outcome::Finding(d),
            Ok(o) => o,
            Err(e) => Outcome::Fail(format!("error: {e}")),
        }
    }
}

pub fn registry() -> Vec<&'static Law> {
    system::LAWS.iter().chain(closure::LAWS).chain(morphism::LAWS).chain(conjecture::LAWS).collect()
}

pub fn find(id: &str) -> Result<&'static Law> {
    registry().into_iter().find(|l| l.id.eq_ignore_ascii_case(id)).ok_or_else(|| CliError::UnknownLaw(id.to_string()))
}

/// Laws whose id starts with `prefix` (e.g. "CL").
pub fn family(prefix: &str) -> Vec<&'static Law> {
    registry()
        .into_iter()
        .filter(|l| l.id.starts_with(prefix) && l.id[prefix.len()..].chars().all(|c| c.is_ascii_digit()))
        .collect()
}

/// Collects the first violated claim of a multi-part statement.
#[derive(Default)]
pub(crate) struct Claims {
    failure: Option<String>,
    top_degenerate: bool,
    bounded: bool,
}

impl Claims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) -> &mut Self {
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
        self
    }

    /// A violation that is explained by a non-closed top.
    pub fn top_degenerate(&mut self, ok: bool) -> &mut Self {
        self.top_degenerate |= !ok;
        self
    }

    /// A conclusion that fails while a premise only holds up to the bound.
    pub fn bounded(&mut self, ok: bool) -> &mut Self {
        self.bounded |= !ok;
        self
    }

    /// A violated claim that is either a top degeneracy (`repaired` holds)
    /// or a failure.
    pub fn explained(&mut self, ok: bool, repaired: bool, detail: impl FnOnce() -> String) -> &mut Self {
        if ok {
            self
        } else if repaired {
            self.top_degenerate(false)
        } else {
            self.check(false, detail)
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn outcome(&mut self) -> Outcome {
        match self.failure.take() {
            Some(d) => Outcome::Fail(d),
            None if self.top_degenerate => Outcome::Skip(Skip::TopDegenerate),
            None if self.bounded => Outcome::Skip(Skip::Bounded),
            None => Outcome::Pass,
        }
    }
}

pub(crate) fn label(s: &PreNbdSystem, e: Elem) -> String {
    format!("{:?}", s.object().label(e))
}

pub(crate) fn top_closed(s: &PreNbdSystem) -> bool {
    let top = s.object().lattice().top();
    closure(s, top) == top
}

/// The closure with the top forced closed. It differs from the closure only
/// at the top of a space whose top is not closed, so a violation that
/// disappears under it is a top degeneracy.
pub(crate) fn repaired_closure(s: &PreNbdSystem, p: Elem) -> Elem {
    let top = s.object().lattice().top();
    if p == top {
        top
    } else {
        closure(s, p)
    }
}

pub(crate) fn repaired_closed(s: &PreNbdSystem, p: Elem) -> bool {
    repaired_closure(s, p) == p
}

/// Closedness of `f` under the repaired closures.
pub(crate) fn repaired_closed_morphism(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> bool {
    f.dom().lattice().elements().all(|p| !repaired_closed(mu, p) || repaired_closed(phi, f.image(p)))
}

pub(crate) fn single_subobject(s: &PreNbdSystem) -> bool {
    s.object().lattice().len() == 1
}

/// How a verdict may be used as a premise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Premise {
    Exact,
    Bounded,
    No,
}

pub(crate) fn premise(v: &Verdict) -> Premise {
    match v {
        Verdict::Holds => Premise::Exact,
        Verdict::HoldsUpToBound(_) => Premise::Bounded,
        Verdict::Fails(_) => Premise::No,
    }
}

/// Combines premises: any `No` wins, then any `Bounded`.
pub(crate) fn all_premises(ps: &[Premise]) -> Premise {
    if ps.contains(&Premise::No) {
        Premise::No
    } else if ps.contains(&Premise::Bounded) {
        Premise::Bounded
    } else {
        Premise::Exact
    }
}

/// Records `premise ⇒ conclusion holds`: a violated conclusion after an
/// exact premise fails, after a bounded one it is inconclusive.
pub(crate) fn implies_verdict(
    claims: &mut Claims,
    premise: Premise,
    conclusion: &Verdict,
    what: impl FnOnce() -> String,
) {
    implies(claims, premise, !matches!(conclusion, Verdict::Fails(_)), what);
}

/// Records `premise ⇒ ok` for a plain boolean conclusion.
pub(crate) fn implies(claims: &mut Claims, premise: Premise, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        match premise {
            Premise::Exact => {
                claims.check(false, what);
            }
            Premise::Bounded => {
                claims.bounded(false);
            }
            Premise::No => {}
        }
    }
}

pub(crate) fn list(items: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (i, s) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{s}");
    }
    out
}
