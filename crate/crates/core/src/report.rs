//! Serializable views of enumeration results.

use serde::Serialize;

use crate::config::PointConfiguration;
use crate::counting::FacetCensus;
use crate::facet::Facet;
use crate::facet_enum::FacetClass;

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetJson {
    pub normal: Vec<i64>,
    pub points: Vec<Vec<i64>>,
    pub subgraph_edges: Vec<[usize; 2]>,
    pub dim: usize,
    pub corank: usize,
}

impl FacetJson {
    pub fn new(cfg: &PointConfiguration, f: &Facet) -> Self {
        FacetJson {
            normal: f.normal.coeffs().to_vec(),
            points: f.points(cfg).map(<[i64]>::to_vec).collect(),
            subgraph_edges: f.subgraph_edges.iter().map(|&(a, b)| [a, b]).collect(),
            dim: f.dim,
            corank: f.corank,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub subgraph_index: usize,
    pub class_size: usize,
    pub corank: usize,
    pub plus_side: Vec<usize>,
    pub facets: Vec<FacetJson>,
}

impl ClassJson {
    pub fn new(cfg: &PointConfiguration, c: &FacetClass) -> Self {
        ClassJson {
            subgraph_index: c.subgraph_index,
            class_size: c.len(),
            corank: c.corank(),
            plus_side: c.subgraph.bipartition().plus(),
            facets: c.facets.iter().map(|f| FacetJson::new(cfg, f)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetsDocument {
    pub schema: &'static str,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub classes: Vec<ClassJson>,
}

impl FacetsDocument {
    pub fn new(cfg: &PointConfiguration, classes: &[FacetClass]) -> Self {
        FacetsDocument {
            schema: SCHEMA_VERSION,
            vertex_count: cfg.vertex_count(),
            facet_count: classes.iter().map(FacetClass::len).sum(),
            classes: classes.iter().map(|c| ClassJson::new(cfg, c)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusClassJson {
    pub corank: usize,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusDocument {
    pub schema: &'static str,
    pub beta: usize,
    pub classes: Vec<CensusClassJson>,
    pub total: u64,
    pub bound: u64,
}

impl From<&FacetCensus> for CensusDocument {
    fn from(c: &FacetCensus) -> Self {
        CensusDocument {
            schema: SCHEMA_VERSION,
            beta: c.beta(),
            classes: c
                .records
                .iter()
                .map(|r| CensusClassJson {
                    corank: r.corank,
                    size: r.size,
                })
                .collect(),
            total: c.total,
            bound: c.bound(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::facet_census;
    use crate::facet_enum::enumerate_facet_classes;
    use crate::families;

    #[test]
    fn k2_documents() {
        let g = families::path(2).unwrap();
        let cfg = PointConfiguration::from_graph(&g);
        let doc = FacetsDocument::new(&cfg, &enumerate_facet_classes(&g).unwrap());
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            r#"{"schema":"v1","vertex_count":2,"facet_count":2,"classes":[{"subgraph_index":0,"class_size":2,"corank":0,"plus_side":[1],"facets":[{"normal":[1],"points":[[-1]],"subgraph_edges":[[1,2]],"dim":0,"corank":0},{"normal":[-1],"points":[[1]],"subgraph_edges":[[1,2]],"dim":0,"corank":0}]}]}"#
        );
        let census = CensusDocument::from(&facet_census(&g).unwrap());
        assert_eq!(
            serde_json::to_string(&census).unwrap(),
            r#"{"schema":"v1","beta":1,"classes":[{"corank":0,"size":2}],"total":2,"bound":2}"#
        );
    }
}
