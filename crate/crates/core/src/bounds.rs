//! Counting bounds on metric and link dimension.
//!
//! Each bound is an inequality in the landmark count `m` that any valid `m`
//! must satisfy. Arithmetic is done in `u128` with saturation; a saturated
//! left side always exceeds the right side, which fits in `u64`.

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::graph::Graph;

// search cap for minimal m when a bound is driven by arbitrary parameters
const MAX_M: u32 = 4096;

fn pow(base: u64, exp: u32) -> u128 {
    u128::from(base).saturating_pow(exp)
}

/// Distinct coordinates available to `m` landmarks: `m + d^m >= n`.
pub fn metric_dimension_bound(n: u64, d: u64, m: u32) -> bool {
    pow(d, m).saturating_add(u128::from(m)) >= u128::from(n)
}

/// Feasible link slots: a non-landmark has at most `3^m - 1` possible
/// neighbor vectors and a landmark at most `3^(m-1)`, so
/// `(3^m - 1)(n - m) + 3^(m-1) m >= 2l`.
pub fn link_count_bound(n: u64, l: u64, m: u32) -> bool {
    let non_landmarks = u128::from(n.saturating_sub(u64::from(m)));
    let lhs = (pow(3, m) - 1)
        .saturating_mul(non_landmarks)
        .saturating_add(pow(3, m.saturating_sub(1)).saturating_mul(u128::from(m)));
    lhs >= 2 * u128::from(l)
}

/// `(m + d^m) * ndmax / 2 >= l`, compared exactly as `(m + d^m) * ndmax >= 2l`.
pub fn degree_link_bound(d: u64, l: u64, ndmax: u64, m: u32) -> bool {
    pow(d, m)
        .saturating_add(u128::from(m))
        .saturating_mul(u128::from(ndmax))
        >= 2 * u128::from(l)
}

/// `3^(m-1) >= ndmax`.
pub fn landmark_degree_bound(ndmax: u64, m: u32) -> bool {
    pow(3, m.saturating_sub(1)) >= u128::from(ndmax)
}

/// Graph quantities the bounds depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub n: u64,
    pub l: u64,
    pub d: u64,
    pub ndmax: u64,
}

impl BoundParams {
    pub fn of(g: &Graph, h: &DistanceMatrix) -> Self {
        BoundParams {
            n: g.node_count() as u64,
            l: g.edge_count() as u64,
            d: u64::from(h.diameter()),
            ndmax: h.max_degree() as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    MetricDimension,
    LinkCount,
    DegreeLink,
    LandmarkDegree,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::MetricDimension,
        BoundKind::LinkCount,
        BoundKind::DegreeLink,
        BoundKind::LandmarkDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::MetricDimension => "metric-dimension",
            BoundKind::LinkCount => "link-count",
            BoundKind::DegreeLink => "degree-link",
            BoundKind::LandmarkDegree => "landmark-degree",
        }
    }

    /// Whether the bound constrains link dimension through the graph-wide
    /// maximum degree. The landmark-degree inequality only limits the degree
    /// of landmark nodes: a path has maximum degree 2 yet one end landmark
    /// reconstructs it.
    pub fn bounds_link_dimension(self) -> bool {
        self != BoundKind::LandmarkDegree
    }

    pub fn holds(self, p: &BoundParams, m: u32) -> bool {
        match self {
            BoundKind::MetricDimension => metric_dimension_bound(p.n, p.d, m),
            BoundKind::LinkCount => link_count_bound(p.n, p.l, m),
            BoundKind::DegreeLink => degree_link_bound(p.d, p.l, p.ndmax, m),
            BoundKind::LandmarkDegree => landmark_degree_bound(p.ndmax, m),
        }
    }

    /// Smallest `m >= 1` satisfying the bound. Every bound is monotone in `m`.
    pub fn minimal_m(self, p: &BoundParams) -> Option<u32> {
        let cap = match self {
            // the count bound only makes sense with at most n landmarks
            BoundKind::LinkCount => u32::try_from(p.n).unwrap_or(u32::MAX).min(MAX_M),
            _ => MAX_M,
        };
        (1..=cap).find(|&m| self.holds(p, m))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub minimal_m: Option<u32>,
    /// Whether `minimal_m` enters the combined link-dimension lower bound.
    pub combined: bool,
    /// Whether the bound holds at the queried landmark count, if one was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds_at_m: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(flatten)]
    pub params: BoundParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub bounds: Vec<BoundEntry>,
    /// Largest minimal `m` over the combined bounds: a lower bound on link dimension.
    pub link_lower_bound: u32,
    /// Minimal `m` of the node-count bound: a lower bound on metric dimension.
    pub metric_lower_bound: u32,
}

impl BoundsReport {
    pub fn entry(&self, kind: BoundKind) -> &BoundEntry {
        self.bounds
            .iter()
            .find(|e| e.name == kind.name())
            .expect("all bound kinds are reported")
    }
}

pub fn bounds_report(g: &Graph, h: &DistanceMatrix) -> BoundsReport {
    bounds_report_for(BoundParams::of(g, h), None)
}

/// Evaluate every bound for raw parameters, optionally at a given `m`.
pub fn bounds_report_for(params: BoundParams, m: Option<u32>) -> BoundsReport {
    let bounds: Vec<BoundEntry> = BoundKind::ALL
        .iter()
        .map(|&k| BoundEntry {
            name: k.name(),
            minimal_m: k.minimal_m(&params),
            combined: k.bounds_link_dimension(),
            holds_at_m: m.map(|m| k.holds(&params, m)),
        })
        .collect();
    let link_lower_bound = bounds
        .iter()
        .filter(|e| e.combined)
        .filter_map(|e| e.minimal_m)
        .max()
        .unwrap_or(1);
    let metric_lower_bound = BoundKind::MetricDimension.minimal_m(&params).unwrap_or(1);
    BoundsReport {
        params,
        m,
        bounds,
        link_lower_bound,
        metric_lower_bound,
    }
}
