use std::fmt;

use serde::{Deserialize, Serialize};

/// Structured vertex names.
///
/// `Myc(i, j)` is the vertex at tower level `i`, position `j`; `Root` is the
/// apex vertex adjacent to the whole top level; `Pair` names direct-product
/// vertices. The JSON forms are `{"plain":k}`, `{"myc":[i,j]}`, `"root"` and
/// `{"pair":[a,b]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexLabel {
    Plain(u32),
    /// (level, position)
    Myc(u32, u32),
    Root,
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn pair(left: VertexLabel, right: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(left), Box::new(right))
    }

    /// Splits a `Pair` label into its coordinates.
    pub fn as_pair(&self) -> Option<(&VertexLabel, &VertexLabel)> {
        match self {
            VertexLabel::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Plain(k) => write!(f, "{k}"),
            VertexLabel::Myc(i, j) => write!(f, "\u{27e8}{i},{j}\u{27e9}"),
            VertexLabel::Root => write!(f, "u"),
            VertexLabel::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let cases = [
            (VertexLabel::Plain(3), r#"{"plain":3}"#),
            (VertexLabel::Myc(1, 4), r#"{"myc":[1,4]}"#),
            (VertexLabel::Root, r#""root""#),
            (
                VertexLabel::pair(VertexLabel::Plain(0), VertexLabel::Root),
                r#"{"pair":[{"plain":0},"root"]}"#,
            ),
        ];
        for (label, json) in cases {
            assert_eq!(serde_json::to_string(&label).unwrap(), json);
            assert_eq!(serde_json::from_str::<VertexLabel>(json).unwrap(), label);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(VertexLabel::Myc(0, 2).to_string(), "\u{27e8}0,2\u{27e9}");
        assert_eq!(VertexLabel::Root.to_string(), "u");
        assert_eq!(
            VertexLabel::pair(VertexLabel::Plain(1), VertexLabel::Plain(2)).to_string(),
            "(1,2)"
        );
    }
}
