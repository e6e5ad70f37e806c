//! Structural exclusion rules for candidate Gabriel quivers.

use quiver_core::{find_pattern, ArrowRule, PatternSpec, Quiver, VertexRule};
use serde::Serialize;
use surface_algebra::{decompose_into_blocks, triangulation_structure, BlockType};

use crate::dimension::DimensionObstruction;
use crate::wild::UnfoldingTree;

/// Every way a candidate can be ruled out, in reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    Disconnected,
    /// F7: an arrow and a double arrow share a source, or dually.
    KroneckerPair,
    /// F1: an arrow that is the only exit of its source and the only entry of its target.
    LoneArrow,
    /// F2: a (1,2)-vertex leaving by a double arrow, or dually.
    DoubleArrowAtNonRegular,
    /// F8: too few vertices and arrows for infinite type.
    FiniteType,
    /// F6: 2-regular but not glued from triangles and loops.
    NotTriangulation,
    /// F3: biregular but not glued from blocks I, II, III, V1 and V2.
    BiregularBlocks,
    /// F5: neighbour conditions at non-regular vertices of a biserial quiver.
    BiserialNeighbours,
    /// F4: the reduced quiver contains the closed forbidden square.
    ForbiddenSquare,
    Dimension,
    WildCovering,
    CaseTable,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Disconnected => "connected",
            Rule::KroneckerPair => "F7",
            Rule::LoneArrow => "F1",
            Rule::DoubleArrowAtNonRegular => "F2",
            Rule::FiniteType => "F8",
            Rule::NotTriangulation => "F6",
            Rule::BiregularBlocks => "F3",
            Rule::BiserialNeighbours => "F5",
            Rule::ForbiddenSquare => "F4",
            Rule::Dimension => "dimension",
            Rule::WildCovering => "wild",
            Rule::CaseTable => "table",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::Disconnected => "Gabriel quivers of indecomposable algebras are connected",
            Rule::KroneckerPair => "a Kronecker pair with an extra arrow gives a wild subcategory",
            Rule::LoneArrow => "symmetric algebras of infinite type have no arrow that is alone at both ends",
            Rule::DoubleArrowAtNonRegular => "a (1,2)-vertex cannot leave by a double arrow (dually for (2,1))",
            Rule::FiniteType => "vertices plus arrows at most six forces finite representation type",
            Rule::NotTriangulation => "a 2-regular Gabriel quiver must be a triangulation quiver",
            Rule::BiregularBlocks => "a biregular Gabriel quiver is glued from blocks I, II, III, V1 and V2",
            Rule::BiserialNeighbours => {
                "in a biserial quiver a (1,2)-vertex has no (1,2)-successor and some 1-regular successor (dually)"
            }
            Rule::ForbiddenSquare => "the reduced quiver admits no closed square with a diagonal triangle",
            Rule::Dimension => "dimension vectors of projectives force p_i = ĥ_i or a zero coordinate",
            Rule::WildCovering => "a certified wild tree in the covering",
            Rule::CaseTable => "residual case excluded by a case-specific argument",
        }
    }
}

/// Evidence attached to an exclusion. Vertices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    Arrow { from: usize, to: usize },
    Vertex { vertex: usize },
    Vertices { vertices: Vec<usize> },
    Dimension(DimensionObstruction),
    Tree(UnfoldingTree),
    TableEntry { id: String },
}

/// Outcome of running the filter battery on one candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    /// The first rule that fired, or `None` for a survivor.
    pub rule: Option<Rule>,
    pub witness: Witness,
}

impl ExclusionReport {
    pub fn survives() -> Self {
        ExclusionReport {
            rule: None,
            witness: Witness::None,
        }
    }

    pub fn excluded(rule: Rule, witness: Witness) -> Self {
        ExclusionReport {
            rule: Some(rule),
            witness,
        }
    }

    pub fn is_excluded(&self) -> bool {
        self.rule.is_some()
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_excluded() {
            "excluded"
        } else {
            "survives"
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.verdict(),
            "rule": self.rule.map(Rule::id),
            "citation": self.rule.map(Rule::citation),
            "witness": self.witness,
        })
    }
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn kronecker_pair(q: &Quiver) -> Option<Witness> {
    [PatternSpec::k2_plus(), PatternSpec::k2_minus()]
        .iter()
        .find_map(|spec| find_pattern(q, spec).into_iter().next())
        .map(|m| Witness::Vertices {
            vertices: one_based(&m),
        })
}

fn lone_arrow(q: &Quiver) -> Option<Witness> {
    let deg = q.degrees_all();
    for i in 0..q.n() {
        for j in 0..q.n() {
            if i != j && q.mult(i, j) == 1 && deg[i].outdeg == 1 && deg[j].indeg == 1 {
                return Some(Witness::Arrow {
                    from: i + 1,
                    to: j + 1,
                });
            }
        }
    }
    None
}

fn double_arrow_at_non_regular(q: &Quiver) -> Option<Witness> {
    let deg = q.degrees_all();
    (0..q.n())
        .find(|&i| {
            (deg[i].is(1, 2) && (0..q.n()).any(|j| q.mult(i, j) == 2))
                || (deg[i].is(2, 1) && (0..q.n()).any(|j| q.mult(j, i) == 2))
        })
        .map(|i| Witness::Vertex { vertex: i + 1 })
}

fn finite_type(q: &Quiver) -> Option<Witness> {
    (q.n() as u32 + q.arrow_count() <= 6).then_some(Witness::None)
}

fn not_triangulation(q: &Quiver) -> Option<Witness> {
    (q.is_regular(2) && triangulation_structure(q).is_none()).then_some(Witness::None)
}

const BIREGULAR_BLOCKS: [BlockType; 5] = [
    BlockType::I,
    BlockType::II,
    BlockType::III,
    BlockType::V1,
    BlockType::V2,
];

fn biregular_blocks(q: &Quiver) -> Option<Witness> {
    if !q.is_biregular() || q.is_regular(2) || decompose_into_blocks(q, &BIREGULAR_BLOCKS).is_some()
    {
        return None;
    }
    let deg = q.degrees_all();
    let ones: Vec<usize> = (0..q.n()).filter(|&v| deg[v].is_regular(1)).collect();
    Some(Witness::Vertices {
        vertices: one_based(&ones),
    })
}

fn biserial_neighbours(q: &Quiver) -> Option<Witness> {
    if !q.is_biserial() {
        return None;
    }
    let deg = q.degrees_all();
    for i in 0..q.n() {
        let (next, bad) = if deg[i].is(1, 2) {
            (q.successors(i), (1, 2))
        } else if deg[i].is(2, 1) {
            (q.predecessors(i), (2, 1))
        } else {
            continue;
        };
        let next: Vec<usize> = next.into_iter().filter(|&j| j != i).collect();
        let same_kind = next.iter().any(|&j| deg[j].is(bad.0, bad.1));
        let has_one = next.iter().any(|&j| deg[j].is_regular(1));
        if same_kind || !has_one {
            return Some(Witness::Vertex { vertex: i + 1 });
        }
    }
    None
}

/// The closed square with a diagonal triangle, in the order (L, T, R, B).
pub fn forbidden_square() -> PatternSpec {
    let t = Quiver::from_arrows(4, &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 0, 1)])
        .expect("static template");
    let mut spec = PatternSpec::new(t, ArrowRule::AtLeast);
    for v in 0..4 {
        spec = spec.with_rule(v, VertexRule::Closed);
    }
    spec
}

fn forbidden_square_in(q: &Quiver) -> Option<Witness> {
    find_pattern(&q.reduced(), &forbidden_square())
        .into_iter()
        .next()
        .map(|m| Witness::Vertices {
            vertices: one_based(&m),
        })
}

/// Rules in the fixed order F7, F1, F2, F8, F6, F3, F5, F4.
pub const STRUCTURAL_ORDER: [Rule; 8] = [
    Rule::KroneckerPair,
    Rule::LoneArrow,
    Rule::DoubleArrowAtNonRegular,
    Rule::FiniteType,
    Rule::NotTriangulation,
    Rule::BiregularBlocks,
    Rule::BiserialNeighbours,
    Rule::ForbiddenSquare,
];

/// Evaluates a single structural rule.
pub fn check_rule(q: &Quiver, rule: Rule) -> Option<Witness> {
    match rule {
        Rule::KroneckerPair => kronecker_pair(q),
        Rule::LoneArrow => lone_arrow(q),
        Rule::DoubleArrowAtNonRegular => double_arrow_at_non_regular(q),
        Rule::FiniteType => finite_type(q),
        Rule::NotTriangulation => not_triangulation(q),
        Rule::BiregularBlocks => biregular_blocks(q),
        Rule::BiserialNeighbours => biserial_neighbours(q),
        Rule::ForbiddenSquare => forbidden_square_in(q),
        _ => None,
    }
}

/// The first structural rule that fires on `q`.
pub fn structural_filters(q: &Quiver) -> ExclusionReport {
    STRUCTURAL_ORDER
        .iter()
        .find_map(|&r| check_rule(q, r).map(|w| ExclusionReport::excluded(r, w)))
        .unwrap_or_else(ExclusionReport::survives)
}
