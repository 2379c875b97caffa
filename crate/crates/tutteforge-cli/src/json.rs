//! File formats: matroid, graph, polynomial, and linking-map JSON.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

use tutteforge_core::{
    validate_prematroid, BivarMultiSet, Budget, ElemSubset, Graph, GraphEdge, GroundSet, Linking,
    PreMatroid,
};

#[derive(Debug, Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub bases: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub x: u32,
    pub y: u32,
    pub coeff: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LinkingMapJson {
    pub map: BTreeMap<String, String>,
}

/// A parsed input file: either a matroid or a graph (with its derived
/// graphic matroid).
pub enum Input {
    Matroid(PreMatroid),
    Graph { graph: Graph, matroid: PreMatroid },
}

impl Input {
    pub fn matroid(&self) -> &PreMatroid {
        match self {
            Input::Matroid(m) => m,
            Input::Graph { matroid, .. } => matroid,
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Input::Matroid(_) => None,
            Input::Graph { graph, .. } => Some(graph),
        }
    }
}

/// Load a matroid or graph file, detected by its top-level keys.
pub fn load_input(path: &Path, budget: Budget) -> Result<Input> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read `{}`", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("`{}` is not valid JSON", path.display()))?;
    let object = value
        .as_object()
        .ok_or_else(|| anyhow!("`{}` must hold a JSON object", path.display()))?;
    if object.contains_key("ground") && object.contains_key("bases") {
        let parsed: MatroidJson = serde_json::from_value(value.clone())?;
        Ok(Input::Matroid(matroid_from_json(&parsed)?))
    } else if object.contains_key("vertices") && object.contains_key("edges") {
        let parsed: GraphJson = serde_json::from_value(value.clone())?;
        let graph = graph_from_json(&parsed)?;
        let matroid = tutteforge_core::graphic_matroid(&graph, budget)?;
        Ok(Input::Graph { graph, matroid })
    } else {
        bail!(
            "`{}` is neither a matroid file (ground/bases) nor a graph file (vertices/edges)",
            path.display()
        );
    }
}

pub fn matroid_from_json(json: &MatroidJson) -> Result<PreMatroid> {
    let ground = GroundSet::new(json.ground.iter().cloned())?;
    Ok(validate_prematroid(ground, &json.bases)?)
}

pub fn matroid_to_json(m: &PreMatroid) -> MatroidJson {
    MatroidJson {
        ground: m.ground().labels().to_vec(),
        bases: m.bases().iter().map(|&b| m.ground().labels_of(b)).collect(),
    }
}

pub fn graph_from_json(json: &GraphJson) -> Result<Graph> {
    let edges = json
        .edges
        .iter()
        .map(|e| GraphEdge {
            id: e.id.clone(),
            u: e.u,
            v: e.v,
        })
        .collect();
    Ok(Graph::new(json.vertices, edges)?)
}

pub fn polynomial_to_json(p: &BivarMultiSet) -> PolynomialJson {
    PolynomialJson {
        terms: p
            .to_terms()
            .iter()
            .map(|t| TermJson {
                x: t.x,
                y: t.y,
                coeff: t.coeff,
            })
            .collect(),
    }
}

/// Reads one basis of a linking map: labels in ground order joined with
/// commas, the empty basis being the empty string.
fn basis_from_key(m: &PreMatroid, key: &str) -> Result<ElemSubset> {
    let labels: Vec<&str> = if key.is_empty() {
        Vec::new()
    } else {
        key.split(',').collect()
    };
    let set = m.ground().subset_of_labels(&labels)?;
    if !m.is_basis(set) {
        bail!("`{key}` is not a basis of the matroid");
    }
    Ok(set)
}

/// Build an unverified linking from a map file.
pub fn linking_from_json(
    source: PreMatroid,
    target: PreMatroid,
    json: &LinkingMapJson,
) -> Result<Linking> {
    if json.map.len() != source.basis_count() {
        bail!(
            "map has {} entries but the source has {} bases",
            json.map.len(),
            source.basis_count()
        );
    }
    let mut map = vec![usize::MAX; source.basis_count()];
    for (from, to) in &json.map {
        let b = basis_from_key(&source, from)?;
        let t = basis_from_key(&target, to)?;
        let i = source.basis_index(b).expect("checked basis");
        let j = target.basis_index(t).expect("checked basis");
        if map[i] != usize::MAX {
            bail!("basis `{from}` is mapped twice");
        }
        map[i] = j;
    }
    Ok(Linking::new(source, target, map)?)
}
