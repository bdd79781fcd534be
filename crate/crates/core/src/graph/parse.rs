use super::{Graph, GraphBuilder, GraphError};

/// Parses the line-oriented graph format:
///
/// ```text
/// # comment
/// vertices: v z w
/// edge e: z -> v
/// edge f: z -> w
/// ```
///
/// Repeated `vertices:` lines accumulate. Edges may name vertices declared
/// further down the file.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut b = GraphBuilder::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut lx = Lexer::new(content, line_no);
        let Some(keyword) = lx.word()? else { continue };
        match keyword.as_str() {
            "vertices" => {
                lx.expect(':')?;
                let mut any = false;
                while let Some(name) = lx.word()? {
                    b.vertex(name, line_no)?;
                    any = true;
                }
                if !any {
                    return Err(lx.error("expected at least one vertex name"));
                }
            }
            "edge" => {
                let name = lx.required_word("edge name")?;
                lx.expect(':')?;
                let source = lx.required_word("source vertex")?;
                lx.expect_arrow()?;
                let range = lx.required_word("range vertex")?;
                lx.end()?;
                b.edge(name, source, range, line_no)?;
            }
            other => {
                return Err(GraphError::Syntax {
                    line: line_no,
                    column: lx.last_start + 1,
                    message: format!("expected `vertices:` or `edge`, found `{other}`"),
                })
            }
        }
    }
    b.finish()
}

struct Lexer {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    last_start: usize,
}

impl Lexer {
    fn new(src: &str, line: usize) -> Self {
        Lexer {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            line,
            last_start: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |c| c.0) + 1
    }

    fn error(&self, message: impl Into<String>) -> GraphError {
        GraphError::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    /// Next identifier, `None` at end of line.
    fn word(&mut self) -> Result<Option<String>, GraphError> {
        self.skip_ws();
        self.last_start = self.pos;
        let Some(&(_, c)) = self.chars.get(self.pos) else {
            return Ok(None);
        };
        if !(c.is_ascii_alphabetic() || c == '_') {
            return Err(self.error(format!("unexpected character `{c}`")));
        }
        let start = self.pos;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos].1;
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Some(
            self.chars[start..self.pos].iter().map(|c| c.1).collect(),
        ))
    }

    fn required_word(&mut self, what: &str) -> Result<String, GraphError> {
        self.word()?
            .ok_or_else(|| self.error(format!("expected {what}")))
    }

    fn expect(&mut self, ch: char) -> Result<(), GraphError> {
        self.skip_ws();
        match self.chars.get(self.pos) {
            Some(&(_, c)) if c == ch => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{ch}`"))),
        }
    }

    fn expect_arrow(&mut self) -> Result<(), GraphError> {
        self.expect('-')
            .and_then(|_| match self.chars.get(self.pos) {
                Some(&(_, '>')) => {
                    self.pos += 1;
                    Ok(())
                }
                _ => Err(self.error("expected `->`")),
            })
            .map_err(|_| self.error("expected `->`"))
    }

    fn end(&mut self) -> Result<(), GraphError> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_vertex_line() {
        let g = parse_graph("vertices: v1 v2\nedge a: v1 -> v2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let a = g.edge_id("a").unwrap();
        assert_eq!(g.vertex_name(g.source(a)), "v1");
        assert_eq!(g.vertex_name(g.range(a)), "v2");
    }

    #[test]
    fn parses_w_with_comments_and_accumulating_vertices() {
        let text = "# the graph v <- z -> w\nvertices: v z\nvertices: w  # third\n\nedge e: z -> v\nedge f:z->w\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, crate::fixtures::w());
    }

    #[test]
    fn undeclared_endpoint() {
        let err = parse_graph("edge a: v1 -> v2").unwrap_err();
        assert_eq!(
            err,
            GraphError::UndeclaredEndpoint {
                line: 1,
                edge: "a".into(),
                vertex: "v1".into()
            }
        );
    }

    #[test]
    fn duplicate_names() {
        let err = parse_graph("vertices: a b a").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateName {
                line: 1,
                name: "a".into()
            }
        );
        let err = parse_graph("vertices: a b\nedge a: a -> b").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateName {
                line: 2,
                name: "a".into()
            }
        );
        let err = parse_graph("vertices: a b\nedge x: a -> b\nedge x: b -> a").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateName {
                line: 3,
                name: "x".into()
            }
        );
    }

    #[test]
    fn syntax_errors_report_position() {
        let err = parse_graph("vertices: a b\nedge x a -> b").unwrap_err();
        assert_eq!(
            err,
            GraphError::Syntax {
                line: 2,
                column: 8,
                message: "expected `:`".into()
            }
        );
        let err = parse_graph("vertices: a b\nedge x: a => b").unwrap_err();
        assert!(
            matches!(
                err,
                GraphError::Syntax {
                    line: 2,
                    column: 11,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = parse_graph("vertices:").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 1, .. }));
        let err = parse_graph("vertex: a").unwrap_err();
        assert!(matches!(
            err,
            GraphError::Syntax {
                line: 1,
                column: 1,
                ..
            }
        ));
        let err = parse_graph("vertices: 1a").unwrap_err();
        assert!(matches!(
            err,
            GraphError::Syntax {
                line: 1,
                column: 11,
                ..
            }
        ));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = parse_graph("# nothing\n\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }
}
