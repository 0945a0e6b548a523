//! From a fractional factor to a certified component factor.
//!
//! A half-integral factor is read as a coloured spanning subgraph: edges of
//! value 1 are red, edges of value 1/2 are blue. Local rewrite rules then
//! delete edges (and recolour a few) while keeping every vertex within
//! `[1, k + 1/2]`. Each rule deletes at least one edge, so the process stops
//! after at most `||G||` steps. At the fixpoint each component of the factor
//! is a member of the family for `k`.
//!
//! Two rule catalogs exist: one for `k = 1` (ids `R1`..`R8`) and one for
//! `k >= 2` (ids `S1`..`S9`). Rules are tried in catalog order and each is
//! applied at its first location by ascending vertex id, so the trace is
//! deterministic.

mod cycles;
mod rules;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{classify_component, ComponentClass, Family};
use crate::fractional::{
    find_fractional_factor, first_violation, minimum_support_factor, HalfIntegralAssignment,
    MIN_SUPPORT_LIMIT,
};
use crate::graph::{norm, Edge, Graph, VertexSet};

pub use rules::Catalog;

/// Edge colour in a factor: red for `h(e) = 1`, blue for `h(e) = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn half_units(self) -> u32 {
        match self {
            Color::Red => 2,
            Color::Blue => 1,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// The support of a half-integral factor with its edge colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredFactor {
    n: usize,
    k: u32,
    colors: BTreeMap<Edge, Color>,
}

impl ColoredFactor {
    /// Colours the support of `h`. Fails unless `h` is a fractional
    /// `[1, k + 1/2]`-factor of `g`.
    pub fn from_assignment(g: &Graph, k: u32, h: &HalfIntegralAssignment) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if let Some(vertex) = first_violation(g, k, h)? {
            return Err(Error::Unverified { k, vertex });
        }
        let colors = h
            .iter()
            .filter_map(|(e, units)| match units {
                2 => Some((e, Color::Red)),
                1 => Some((e, Color::Blue)),
                _ => None,
            })
            .collect();
        Ok(ColoredFactor {
            n: g.order(),
            k,
            colors,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges in the support.
    pub fn size(&self) -> usize {
        self.colors.len()
    }

    /// Support edges with their colours, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        self.colors.get(&norm(u, v)).copied()
    }

    /// `2 * deg^h(v)` for every vertex.
    pub fn h_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0; self.n];
        for (&(u, v), c) in &self.colors {
            deg[u] += c.half_units();
            deg[v] += c.half_units();
        }
        deg
    }

    /// First vertex outside `[1, k + 1/2]`.
    pub fn violation(&self) -> Option<usize> {
        let top = 2 * self.k + 1;
        self.h_degrees().iter().position(|d| !(2..=top).contains(d))
    }

    /// The support as a simple graph.
    pub fn support(&self) -> Graph {
        Graph::from_edges(self.n, self.colors.keys().copied()).expect("support edges are valid")
    }

    /// Back to edge values over `g`'s edge list.
    pub fn to_assignment(&self, g: &Graph) -> Result<HalfIntegralAssignment> {
        HalfIntegralAssignment::from_pairs(
            g,
            self.edges().map(|((u, v), c)| (u, v, c.half_units() as u8)),
        )
    }

    fn apply(&mut self, step: &RuleStep) -> Result<()> {
        let mut touched = Vec::new();
        for &e in &step.removed {
            let gone = self.colors.remove(&e);
            debug_assert!(gone.is_some(), "{} removes missing edge {e:?}", step.rule);
            touched.extend([e.0, e.1]);
        }
        for &(e, c) in &step.recolored {
            *self.colors.get_mut(&e).expect("recoloured edge is present") = c;
            touched.extend([e.0, e.1]);
        }
        let deg = self.h_degrees();
        let top = 2 * self.k + 1;
        touched.sort_unstable();
        match touched.into_iter().find(|&v| !(2..=top).contains(&deg[v])) {
            Some(vertex) => Err(Error::InvalidRewrite {
                rule: step.rule,
                vertex,
            }),
            None => Ok(()),
        }
    }
}

/// One applied rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleStep {
    pub rule: &'static str,
    /// The vertices of the configuration the rule matched.
    pub location: Vec<usize>,
    pub removed: Vec<Edge>,
    /// Edges whose colour changed, with the new colour.
    pub recolored: Vec<(Edge, Color)>,
}

impl fmt::Display for RuleStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |es: &mut dyn Iterator<Item = String>| es.collect::<Vec<_>>().join(" ");
        write!(
            f,
            "{} at [{}]: delete {}",
            self.rule,
            join(&mut self.location.iter().map(|v| v.to_string())),
            join(&mut self.removed.iter().map(|(u, v)| format!("{u}-{v}"))),
        )?;
        if !self.recolored.is_empty() {
            let moves = join(
                &mut self
                    .recolored
                    .iter()
                    .map(|((u, v), c)| format!("{u}-{v}={c}")),
            );
            write!(f, "; recolor {moves}")?;
        }
        Ok(())
    }
}

/// The sequence of rules applied by [`minimize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RuleTrace {
    steps: Vec<RuleStep>,
}

impl RuleTrace {
    pub fn steps(&self) -> &[RuleStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for RuleTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Applies the catalog for `f.k()` until no rule matches.
pub fn minimize(f: ColoredFactor) -> Result<(ColoredFactor, RuleTrace)> {
    let catalog = Catalog::for_k(f.k);
    minimize_with(f, catalog)
}

/// [`minimize`] with an explicit catalog, which must match the factor's `k`.
pub fn minimize_with(mut f: ColoredFactor, catalog: Catalog) -> Result<(ColoredFactor, RuleTrace)> {
    if !catalog.accepts(f.k) {
        return Err(Error::CatalogMismatch {
            k: catalog.k_hint(),
            factor_k: f.k,
        });
    }
    if let Some(vertex) = f.violation() {
        return Err(Error::Unverified { k: f.k, vertex });
    }
    let budget = f.size();
    let mut trace = RuleTrace::default();
    while let Some(step) = rules::next_step(&f, catalog) {
        log::debug!("{step}");
        f.apply(&step)?;
        trace.steps.push(step);
        debug_assert!(trace.len() <= budget);
    }
    Ok((f, trace))
}

/// One component of a component factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedComponent {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
    pub class: ComponentClass,
}

/// A spanning subgraph split into components, each tagged with its class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    pub family: Family,
    pub components: Vec<CertifiedComponent>,
}

impl FactorCertificate {
    /// Splits the support of `f` into components and classifies each.
    pub fn of(f: &ColoredFactor) -> Result<Self> {
        let family = Family::for_k(f.k)?;
        let support = f.support();
        let components = support
            .components()
            .into_iter()
            .map(|vertices| {
                let class = classify_component(&support.induced(&vertices), family);
                let edges = f
                    .colors
                    .keys()
                    .copied()
                    .filter(|&(u, _)| vertices.binary_search(&u).is_ok())
                    .collect();
                CertifiedComponent {
                    vertices: VertexSet::new(vertices),
                    edges,
                    class,
                }
            })
            .collect();
        Ok(FactorCertificate { family, components })
    }

    pub fn classes(&self) -> Vec<ComponentClass> {
        self.components.iter().map(|c| c.class).collect()
    }

    pub fn is_classified(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.class != ComponentClass::Other)
    }
}

/// Independent check of a certificate against `g`: the components
/// partition `V(g)`, use only edges of `g` inside themselves, are connected,
/// and have the class they claim.
pub fn verify_certificate(g: &Graph, cert: &FactorCertificate) -> bool {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (i, comp) in cert.components.iter().enumerate() {
        for v in comp.vertices.iter() {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return false;
    }
    cert.components.iter().enumerate().all(|(i, comp)| {
        let local = |v: usize| comp.vertices.as_slice().binary_search(&v).ok();
        let mut edges = Vec::with_capacity(comp.edges.len());
        for &(u, v) in &comp.edges {
            if !g.has_edge(u, v) || owner[u] != i || owner[v] != i {
                return false;
            }
            edges.push((local(u).unwrap(), local(v).unwrap()));
        }
        let Ok(h) = Graph::from_edges(comp.vertices.len(), edges) else {
            return false;
        };
        h.size() == comp.edges.len()
            && h.is_connected()
            && comp.class != ComponentClass::Other
            && classify_component(&h, cert.family) == comp.class
    })
}

/// State left behind when the rules stop at a factor with an unclassified
/// component.
#[derive(Clone, Debug)]
pub struct UnclassifiedFixpoint {
    pub trace: RuleTrace,
    pub fixpoint: FactorCertificate,
    /// A certificate from a minimum-support factor, when the graph is small
    /// enough to search for one and its components classify.
    pub fallback: Option<FactorCertificate>,
}

impl fmt::Display for UnclassifiedFixpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .fixpoint
            .classes()
            .iter()
            .map(|c| c.to_string())
            .collect();
        write!(
            f,
            "rules stopped after {} steps with components [{}]",
            self.trace.len(),
            classes.join(", ")
        )?;
        if self.fallback.is_some() {
            f.write_str("; a minimum-support factor does classify")?;
        }
        Ok(())
    }
}

/// Everything produced on the way from a graph to a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Extraction {
    pub assignment: HalfIntegralAssignment,
    #[serde(skip)]
    pub factor: ColoredFactor,
    pub trace: RuleTrace,
    pub certificate: FactorCertificate,
}

/// A component factor of `g` from the family for `k`, or `None` when `g`
/// has no fractional `[1, k + 1/2]`-factor.
pub fn extract_component_factor(g: &Graph, k: u32) -> Result<Option<Extraction>> {
    let Some(assignment) = find_fractional_factor(g, k)? else {
        return Ok(None);
    };
    let start = ColoredFactor::from_assignment(g, k, &assignment)?;
    let (factor, trace) = minimize(start)?;
    let certificate = FactorCertificate::of(&factor)?;
    if !certificate.is_classified() {
        let fallback = if g.size() <= MIN_SUPPORT_LIMIT {
            minimum_support_factor(g, k)?
                .map(|h| ColoredFactor::from_assignment(g, k, &h))
                .transpose()?
                .map(|f| FactorCertificate::of(&f))
                .transpose()?
                .filter(FactorCertificate::is_classified)
        } else {
            None
        };
        return Err(Error::FixpointUnclassified(Box::new(
            UnclassifiedFixpoint {
                trace,
                fixpoint: certificate,
                fallback,
            },
        )));
    }
    Ok(Some(Extraction {
        assignment,
        factor,
        trace,
        certificate,
    }))
}
