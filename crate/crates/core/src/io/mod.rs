//! Graph input and output: graph6, edge lists, named graphs, vertex lists.

pub mod catalog;
pub mod edge_list;
pub mod graph6;
pub mod vertex_list;

pub use catalog::{figure1_name, named_graph, CatalogError, NamedGraphSpec, FIGURE1_LEN};
pub use edge_list::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, read_graph6_stream, to_graph6, Graph6Error};
pub use vertex_list::{parse_vertex_list, VertexListError};
