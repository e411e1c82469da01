//! JSON documents accepted and produced by the subcommands.

use serde::{Deserialize, Serialize};

use offsolve_core::mst_offers::OfferEdge;
use offsolve_core::ratio::RatioItem;
use offsolve_core::toggle::TreeDecomposition;
use offsolve_core::transfer::TimedEdge;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferInput {
    pub n: usize,
    pub s: usize,
    pub d: usize,
    #[serde(rename = "T")]
    pub deadline: u64,
    pub edges: Vec<TimedEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ItineraryLeg {
    pub edge: usize,
    pub depart: u64,
    pub arrive: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatioItemsInput {
    pub items: Vec<RatioItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sense: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioEdge {
    pub from: u32,
    pub to: u32,
    pub p: f64,
    pub q: f64,
    pub l: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatioGraphInput {
    pub n: usize,
    pub edges: Vec<RatioEdge>,
    pub lmin: u64,
    pub lmax: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxWalkInput {
    pub n: usize,
    pub edges: Vec<WeightedEdgeDoc>,
    pub lmin: u64,
    pub lmax: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightedEdgeDoc {
    pub from: u32,
    pub to: u32,
    pub w: f64,
    pub l: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxSegmentInput {
    pub values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmin: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmax: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MstOffersInput {
    pub n: usize,
    pub q: usize,
    pub edges: Vec<OfferEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AvgFreeInput {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotSort1Input {
    pub permutation: Vec<u32>,
    pub case: u8,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotSort2Input {
    pub permutation: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwapSortInput {
    pub permutation: Vec<u32>,
    pub allowed: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleSortInput {
    pub permutation: Vec<u32>,
    pub costs: Vec<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircSortInput {
    pub values: Vec<u32>,
    pub k: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjSwapsInput {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    pub k: u32,
    #[serde(default)]
    pub script: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    pub values: Vec<u32>,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveSortInput {
    pub permutation: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToggleGraphDoc {
    pub p: usize,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToggleInput {
    pub graph: ToggleGraphDoc,
    #[serde(rename = "I")]
    pub initial: Vec<u8>,
    #[serde(rename = "F")]
    pub target: Vec<u8>,
    #[serde(rename = "C")]
    pub costs: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub bags: Vec<Vec<u32>>,
    pub tree_edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
}

impl From<DecompositionDoc> for TreeDecomposition {
    fn from(d: DecompositionDoc) -> Self {
        TreeDecomposition {
            bags: d.bags,
            tree_edges: d.tree_edges,
            width: d.width,
        }
    }
}
