use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{Graph, SetCoverInstance};

/// Either kind of problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    SetCover(SetCoverInstance),
}

impl Instance {
    pub fn as_graph(&self) -> Result<&Graph> {
        match self {
            Instance::Graph(g) => Ok(g),
            Instance::SetCover(_) => {
                Err(Error::parameter("expected a graph instance, got a set cover"))
            }
        }
    }

    pub fn as_set_cover(&self) -> Result<&SetCoverInstance> {
        match self {
            Instance::SetCover(sc) => Ok(sc),
            Instance::Graph(_) => {
                Err(Error::parameter("expected a set-cover instance, got a graph"))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
enum InstanceJson {
    #[serde(rename = "graph")]
    Graph { n: usize, edges: Vec<(usize, usize)> },
    #[serde(rename = "setcover")]
    SetCover { n: usize, family: Vec<Vec<usize>> },
}

/// Decodes the JSON instance format and enforces every type invariant.
///
/// Graphs: `{"type":"graph","n":3,"edges":[[0,1],[1,2]]}`.
/// Set covers: `{"type":"setcover","n":3,"family":[[0,1],[1,2],[2]]}`.
pub fn parse_instance(text: &[u8]) -> Result<Instance> {
    let decoded: InstanceJson =
        serde_json::from_slice(text).map_err(|e| Error::parse(format!("malformed JSON: {e}")))?;
    match decoded {
        InstanceJson::Graph { n, edges } => Ok(Instance::Graph(Graph::new(n, edges)?)),
        InstanceJson::SetCover { n, family } => {
            Ok(Instance::SetCover(SetCoverInstance::new(n, family)?))
        }
    }
}

/// Canonical JSON bytes: edge lists and subset elements sorted ascending.
/// Round-trips through [`parse_instance`] to an identical instance.
pub fn serialize_instance(instance: &Instance) -> Vec<u8> {
    let json = match instance {
        Instance::Graph(g) => InstanceJson::Graph {
            n: g.n_vertices(),
            edges: g.edges().to_vec(),
        },
        Instance::SetCover(sc) => InstanceJson::SetCover {
            n: sc.universe_size(),
            family: sc.family().to_vec(),
        },
    };
    serde_json::to_vec(&json).expect("instance serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph() {
        let inst = parse_instance(br#"{"type":"graph","n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        let g = inst.as_graph().unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_set_cover() {
        let inst =
            parse_instance(br#"{"type":"setcover","n":3,"family":[[0,1],[1,2],[2]]}"#).unwrap();
        let sc = inst.as_set_cover().unwrap();
        assert_eq!(sc.universe_size(), 3);
        assert_eq!(sc.n_subsets(), 3);
    }

    #[test]
    fn self_loop_is_a_parse_error() {
        let err = parse_instance(br#"{"type":"graph","n":3,"edges":[[0,0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        let err = parse_instance(b"{not json").unwrap_err();
        assert!(err.to_string().contains("malformed JSON"));
    }

    #[test]
    fn canonical_output_is_sorted() {
        let inst = parse_instance(br#"{"type":"graph","n":3,"edges":[[2,1],[1,0]]}"#).unwrap();
        let bytes = serialize_instance(&inst);
        assert_eq!(
            String::from_utf8(bytes).unwrap(),
            r#"{"type":"graph","n":3,"edges":[[0,1],[1,2]]}"#
        );
    }

    #[test]
    fn round_trip_identity() {
        let k4 = Instance::Graph(Graph::complete(4).unwrap());
        let parsed = parse_instance(&serialize_instance(&k4)).unwrap();
        assert_eq!(parsed, k4);
        assert_eq!(k4.as_graph().unwrap().n_edges(), 6);
    }
}
