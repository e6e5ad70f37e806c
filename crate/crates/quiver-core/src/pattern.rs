//! Declarative subquiver matching.
//!
//! A [`PatternSpec`] is a small template quiver plus per-vertex constraints.
//! Matches are injective vertex maps from the template into a host quiver.

use crate::quiver::{Quiver, VertexDegree};

/// Maximum number of template vertices.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// Constraint on the host vertex a template vertex maps to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexRule {
    Any,
    /// Host degrees must equal these.
    ExactDegree(VertexDegree),
    /// Host degrees must be at least these.
    MinDegree(VertexDegree),
    /// Every arrow at the host vertex belongs to the matched template copy.
    Closed,
}

/// How template multiplicities constrain host multiplicities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArrowRule {
    /// Host multiplicity between matched vertices equals the template's,
    /// including zero entries.
    Exact,
    /// Host multiplicity is at least the template's.
    AtLeast,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternSpec {
    pub template: Quiver,
    pub vertex_rules: Vec<VertexRule>,
    pub arrow_rule: ArrowRule,
}

impl PatternSpec {
    /// Template with no vertex constraints.
    pub fn new(template: Quiver, arrow_rule: ArrowRule) -> Self {
        let k = template.n();
        assert!(
            k <= MAX_PATTERN_VERTICES,
            "pattern templates are limited to {MAX_PATTERN_VERTICES} vertices"
        );
        PatternSpec {
            template,
            vertex_rules: vec![VertexRule::Any; k],
            arrow_rule,
        }
    }

    pub fn with_rule(mut self, v: usize, rule: VertexRule) -> Self {
        self.vertex_rules[v] = rule;
        self
    }

    /// The wild configuration with one arrow and one double arrow leaving a
    /// common vertex (template vertex 0).
    pub fn k2_plus() -> Self {
        let t = Quiver::from_arrows(3, &[(0, 1, 1), (0, 2, 2)]).expect("static template");
        PatternSpec::new(t, ArrowRule::AtLeast)
    }

    /// The dual of [`PatternSpec::k2_plus`]: arrows entering vertex 0.
    pub fn k2_minus() -> Self {
        let t = Quiver::from_arrows(3, &[(1, 0, 1), (2, 0, 2)]).expect("static template");
        PatternSpec::new(t, ArrowRule::AtLeast)
    }
}

/// All injective matches of `spec` in `host`, in lexicographic order of the
/// image tuple `(image of template vertex 0, image of vertex 1, ...)`.
pub fn find_pattern(host: &Quiver, spec: &PatternSpec) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let k = spec.template.n();
    if k > host.n() {
        return out;
    }
    let degrees = host.degrees_all();
    let tdeg = spec.template.degrees_all();
    let mut image = Vec::with_capacity(k);
    let mut used = vec![false; host.n()];
    extend(host, spec, &degrees, &tdeg, &mut image, &mut used, &mut out);
    out
}

/// True if `spec` has at least one match in `host`.
pub fn contains_pattern(host: &Quiver, spec: &PatternSpec) -> bool {
    !find_pattern(host, spec).is_empty()
}

fn extend(
    host: &Quiver,
    spec: &PatternSpec,
    degrees: &[VertexDegree],
    tdeg: &[VertexDegree],
    image: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let t = image.len();
    if t == spec.template.n() {
        out.push(image.clone());
        return;
    }
    for v in 0..host.n() {
        if used[v] || !vertex_ok(spec.vertex_rules[t], degrees[v], tdeg[t]) {
            continue;
        }
        image.push(v);
        if arrows_ok(host, spec, image) {
            used[v] = true;
            extend(host, spec, degrees, tdeg, image, used, out);
            used[v] = false;
        }
        image.pop();
    }
}

fn vertex_ok(rule: VertexRule, host: VertexDegree, template: VertexDegree) -> bool {
    match rule {
        VertexRule::Any => true,
        VertexRule::ExactDegree(d) => host == d,
        VertexRule::MinDegree(d) => host.indeg >= d.indeg && host.outdeg >= d.outdeg,
        // With multiplicities at least the template's, equal degrees leave no
        // room for outside arrows.
        VertexRule::Closed => host == template,
    }
}

/// Checks the pairs involving the most recently placed template vertex.
fn arrows_ok(host: &Quiver, spec: &PatternSpec, image: &[usize]) -> bool {
    let t = image.len() - 1;
    let v = image[t];
    let ok = |tm: u8, hm: u8| match spec.arrow_rule {
        ArrowRule::Exact => hm == tm,
        ArrowRule::AtLeast => hm >= tm,
    };
    if !ok(spec.template.mult(t, t), host.mult(v, v)) {
        return false;
    }
    image[..t].iter().enumerate().all(|(s, &w)| {
        ok(spec.template.mult(s, t), host.mult(w, v))
            && ok(spec.template.mult(t, s), host.mult(v, w))
    })
}
