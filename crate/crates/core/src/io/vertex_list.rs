//! Comma-separated vertex lists such as `0,2,4`.

use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VertexListError {
    #[error("`{0}` is not a vertex index")]
    NotAnIndex(String),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} listed twice")]
    Repeated(usize),
}

/// Parses a list of distinct vertices below `order`. Blank input is the
/// empty set; whitespace around entries is ignored.
pub fn parse_vertex_list(text: &str, order: usize) -> Result<VertexSet, VertexListError> {
    let mut s = VertexSet::EMPTY;
    if text.trim().is_empty() {
        return Ok(s);
    }
    for tok in text.split(',').map(str::trim) {
        let v: usize = tok
            .parse()
            .map_err(|_| VertexListError::NotAnIndex(tok.to_string()))?;
        if v >= order || v >= crate::graph::MAX_ORDER {
            return Err(VertexListError::OutOfRange { vertex: v, order });
        }
        if s.contains(v) {
            return Err(VertexListError::Repeated(v));
        }
        s.insert(v);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_vertex_list("", 3), Ok(VertexSet::EMPTY));
        assert_eq!(parse_vertex_list("0, 2", 3).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            parse_vertex_list("0,3", 3),
            Err(VertexListError::OutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            parse_vertex_list("1,1", 3),
            Err(VertexListError::Repeated(1))
        );
        assert_eq!(
            parse_vertex_list("0,,1", 3),
            Err(VertexListError::NotAnIndex(String::new()))
        );
        assert_eq!(
            parse_vertex_list("-1", 3),
            Err(VertexListError::NotAnIndex("-1".into()))
        );
    }
}
