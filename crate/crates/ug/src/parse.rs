//! Parser and printer for the `.ug` graph description format.
//!
//! The format is line oriented and UTF-8; `#` starts a comment that
//! runs to the end of the line. Three directives exist:
//!
//! ```text
//! vertex u                     # declare one vertex
//! vertices v w a               # declare several at once
//! edge e : u -> {v, w}         # an edge class with default multiplicity 1
//! edge h : w -> {v} * inf      # an infinite family
//! edge d : u -> {v} * 3        # three parallel edges
//! ```
//!
//! Vertices must be declared before an edge mentions them, which keeps
//! every diagnostic pinned to a single line and column.

use ultragraph::{EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec};

/// A syntax or consistency error, located by 1-based line and column.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Cursor over one line of input. Columns are 1-based character
/// offsets, so diagnostics point where an editor would.
struct Line {
    chars: Vec<char>,
    pos: usize,
    line_no: usize,
}

impl Line {
    fn new(text: &str, line_no: usize) -> Self {
        let uncommented = match text.find('#') {
            Some(hash) => &text[..hash],
            None => text,
        };
        Line { chars: uncommented.chars().collect(), pos: 0, line_no }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line_no, col: self.col(), message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_spaces();
        self.peek().is_none()
    }

    /// Consumes one literal character, after optional whitespace.
    fn expect(&mut self, wanted: char) -> Result<(), ParseError> {
        self.skip_spaces();
        match self.peek() {
            Some(c) if c == wanted => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{wanted}`, found end of line"))),
        }
    }

    /// Consumes a literal two-character arrow `->`.
    fn expect_arrow(&mut self) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.chars.get(self.pos) == Some(&'-') && self.chars.get(self.pos + 1) == Some(&'>') {
            self.pos += 2;
            Ok(())
        } else {
            Err(self.err("expected `->`"))
        }
    }

    /// Consumes an identifier: a letter or `_`, then letters, digits,
    /// or `_`. Returns the name and the column it started at.
    fn name(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        self.skip_spaces();
        let start = self.col();
        let mut out = String::new();
        match self.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => {
                out.push(c);
                self.pos += 1;
            }
            Some(c) => return Err(self.err(format!("expected {what}, found `{c}`"))),
            None => return Err(self.err(format!("expected {what}, found end of line"))),
        }
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((out, start))
    }

    /// Consumes the optional `* <int>` / `* inf` multiplicity suffix.
    fn multiplicity(&mut self) -> Result<Multiplicity, ParseError> {
        self.skip_spaces();
        if self.peek() != Some('*') {
            return Ok(Multiplicity::ONE);
        }
        self.pos += 1;
        self.skip_spaces();
        let start = self.col();
        let mut word = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() {
                word.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if word == "inf" {
            return Ok(Multiplicity::Infinite);
        }
        match word.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(Multiplicity::Finite(n)),
            Ok(_) => Err(ParseError {
                line: self.line_no,
                col: start,
                message: "multiplicity must be at least 1".into(),
            }),
            Err(_) => Err(ParseError {
                line: self.line_no,
                col: start,
                message: format!("expected an integer or `inf` after `*`, found `{word}`"),
            }),
        }
    }
}

/// Parses `.ug` text into a validated [`Ultragraph`].
pub fn parse_ug(text: &str) -> Result<Ultragraph, ParseError> {
    let mut spec = UltragraphSpec::default();

    for (idx, raw) in text.lines().enumerate() {
        let mut line = Line::new(raw, idx + 1);
        if line.at_end() {
            continue;
        }
        let (directive, start) = line.name("a directive")?;
        match directive.as_str() {
            "vertex" => {
                let (name, col) = line.name("a vertex name")?;
                declare_vertex(&mut spec, name, line.line_no, col)?;
            }
            "vertices" => {
                let (name, col) = line.name("a vertex name")?;
                declare_vertex(&mut spec, name, line.line_no, col)?;
                while !line.at_end() {
                    let (name, col) = line.name("a vertex name")?;
                    declare_vertex(&mut spec, name, line.line_no, col)?;
                }
            }
            "edge" => parse_edge(&mut spec, &mut line)?,
            other => {
                return Err(ParseError {
                    line: line.line_no,
                    col: start,
                    message: format!(
                        "unknown directive `{other}` (expected `vertex`, `vertices`, or `edge`)"
                    ),
                })
            }
        }
        if !line.at_end() {
            return Err(line.err("unexpected trailing input"));
        }
    }

    spec.build().map_err(|e| ParseError { line: 0, col: 0, message: e.to_string() })
}

fn declare_vertex(
    spec: &mut UltragraphSpec,
    name: String,
    line: usize,
    col: usize,
) -> Result<(), ParseError> {
    if spec.vertices.iter().any(|v| *v == name) {
        return Err(ParseError { line, col, message: format!("duplicate vertex `{name}`") });
    }
    spec.vertices.push(name);
    Ok(())
}

fn parse_edge(spec: &mut UltragraphSpec, line: &mut Line) -> Result<(), ParseError> {
    let (id, id_col) = line.name("an edge name")?;
    if spec.edges.iter().any(|e| e.id == id) {
        return Err(ParseError {
            line: line.line_no,
            col: id_col,
            message: format!("duplicate edge `{id}`"),
        });
    }
    line.expect(':')?;
    let (source, source_col) = line.name("a source vertex")?;
    check_declared(spec, &source, line.line_no, source_col)?;
    line.expect_arrow()?;
    line.expect('{')?;

    let mut range = Vec::new();
    line.skip_spaces();
    if line.peek() == Some('}') {
        return Err(line.err(format!("edge `{id}` has an empty range")));
    }
    loop {
        let (member, col) = line.name("a range vertex")?;
        check_declared(spec, &member, line.line_no, col)?;
        if range.contains(&member) {
            return Err(ParseError {
                line: line.line_no,
                col,
                message: format!("vertex `{member}` repeated in the range of `{id}`"),
            });
        }
        range.push(member);
        line.skip_spaces();
        match line.peek() {
            Some(',') => {
                line.pos += 1;
            }
            Some('}') => {
                line.pos += 1;
                break;
            }
            Some(c) => return Err(line.err(format!("expected `,` or `}}`, found `{c}`"))),
            None => return Err(line.err("expected `,` or `}` before end of line")),
        }
    }

    let multiplicity = line.multiplicity()?;
    spec.edges.push(EdgeSpec { id, source, range, multiplicity });
    Ok(())
}

fn check_declared(
    spec: &UltragraphSpec,
    name: &str,
    line: usize,
    col: usize,
) -> Result<(), ParseError> {
    if spec.vertices.iter().any(|v| v == name) {
        Ok(())
    } else {
        Err(ParseError {
            line,
            col,
            message: format!("vertex `{name}` is not declared (declare vertices before edges)"),
        })
    }
}

/// Renders a graph back into canonical `.ug` text. Parsing the result
/// reproduces the graph exactly.
pub fn print_ug(g: &Ultragraph) -> String {
    let mut out = String::new();
    if g.vertex_count() > 0 {
        out.push_str("vertices");
        for name in g.vertex_names() {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
    }
    if !g.edges().is_empty() {
        out.push('\n');
    }
    for e in g.edges() {
        let members: Vec<&str> =
            e.range.iter().map(|i| g.vertex_name(ultragraph::VertexId(i))).collect();
        out.push_str(&format!(
            "edge {} : {} -> {{{}}}",
            e.id,
            g.vertex_name(e.source),
            members.join(", ")
        ));
        match e.multiplicity {
            Multiplicity::Finite(1) => {}
            Multiplicity::Finite(n) => out.push_str(&format!(" * {n}")),
            Multiplicity::Infinite => out.push_str(" * inf"),
        }
        out.push('\n');
    }
    out
}
