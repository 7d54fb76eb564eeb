//! Shared helpers for the command-line tests: running the binary, a small
//! JSON Schema checker and a DOT grammar checker.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flockgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn schema(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", name]
        .iter()
        .collect();
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks `value` against the subset of JSON Schema used by the shipped
/// schemas: type, required, properties, additionalProperties, items,
/// minItems, minimum, maximum, minLength. Returns the first violation.
pub fn validate(value: &Value, schema: &Value) -> Result<(), String> {
    validate_at(value, schema, "$")
}

fn validate_at(value: &Value, schema: &Value, at: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{at}: {what}"));
    if let Some(t) = schema.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_u64() || value.is_i64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return fail(&format!("unsupported type {other}")),
        };
        if !ok {
            return fail(&format!("expected {t}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_f64) {
        if value.as_f64().unwrap() < min {
            return fail("below minimum");
        }
    }
    if let Some(max) = schema.get("maximum").and_then(Value::as_f64) {
        if value.as_f64().unwrap() > max {
            return fail("above maximum");
        }
    }
    if let Some(min) = schema.get("minLength").and_then(Value::as_u64) {
        if (value.as_str().unwrap().chars().count() as u64) < min {
            return fail("string too short");
        }
    }
    if let Value::Array(items) = value {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                return fail("too few items");
            }
        }
        if let Some(item_schema) = schema.get("items") {
            for (i, item) in items.iter().enumerate() {
                validate_at(item, item_schema, &format!("{at}[{i}]"))?;
            }
        }
    }
    if let Value::Object(map) = value {
        for key in schema
            .get("required")
            .and_then(Value::as_array)
            .into_iter()
            .flatten()
        {
            if !map.contains_key(key.as_str().unwrap()) {
                return fail(&format!("missing {key}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, v) in map {
            match props.and_then(|p| p.get(key)) {
                Some(s) => validate_at(v, s, &format!("{at}.{key}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return fail(&format!("unexpected property {key}"))
                }
                None => {}
            }
        }
    }
    Ok(())
}

/// Parsed view of a DOT document: node ids with their attributes, and edges.
#[derive(Debug, Default)]
pub struct Dot {
    pub directed: bool,
    pub nodes: Vec<(String, Vec<(String, String)>)>,
    pub edges: Vec<(String, String)>,
}

impl Dot {
    pub fn attr(&self, node: &str, key: &str) -> Option<&str> {
        self.nodes
            .iter()
            .filter(|(id, _)| id == node)
            .flat_map(|(_, a)| a)
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Sym(char),
    Arrow(bool),
}

fn lex(text: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if "{}[]=;,".contains(c) {
            out.push(Tok::Sym(c));
            chars.next();
        } else if c == '-' {
            chars.next();
            match chars.next() {
                Some('>') => out.push(Tok::Arrow(true)),
                Some('-') => out.push(Tok::Arrow(false)),
                Some(d) if d.is_ascii_digit() || d == '.' => {
                    let mut s = format!("-{d}");
                    while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit() || **d == '.') {
                        s.push(d);
                        chars.next();
                    }
                    out.push(Tok::Id(s));
                }
                other => return Err(format!("unexpected {other:?} after '-'")),
            }
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('\\') => {
                        let e = chars.next().ok_or("unterminated escape")?;
                        if e != '"' {
                            s.push('\\');
                        }
                        s.push(e);
                    }
                    Some('"') => break,
                    Some(ch) => s.push(ch),
                    None => return Err("unterminated string".into()),
                }
            }
            out.push(Tok::Id(s));
        } else if c.is_alphanumeric() || c == '_' || c == '.' {
            let mut s = String::new();
            while let Some(&d) = chars
                .peek()
                .filter(|d| d.is_alphanumeric() || **d == '_' || **d == '.')
            {
                s.push(d);
                chars.next();
            }
            let numeral = s.chars().all(|d| d.is_ascii_digit() || d == '.');
            let ident = !s.starts_with(|d: char| d.is_ascii_digit()) && !s.contains('.');
            if !numeral && !ident {
                return Err(format!("invalid identifier {s}"));
            }
            out.push(Tok::Id(s));
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    dot: Dot,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), String> {
        match self.next() {
            Some(Tok::Sym(d)) if d == c => Ok(()),
            other => Err(format!("expected '{c}', found {other:?}")),
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.next() {
            Some(Tok::Id(s)) => Ok(s),
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn attr_lists(&mut self) -> Result<Vec<(String, String)>, String> {
        let mut attrs = Vec::new();
        while self.peek() == Some(&Tok::Sym('[')) {
            self.next();
            while self.peek() != Some(&Tok::Sym(']')) {
                let k = self.id()?;
                self.expect_sym('=')?;
                let v = self.id()?;
                attrs.push((k, v));
                if matches!(self.peek(), Some(Tok::Sym(';' | ','))) {
                    self.next();
                }
            }
            self.next();
        }
        Ok(attrs)
    }

    fn stmt(&mut self) -> Result<(), String> {
        let first = self.id()?;
        if matches!(first.as_str(), "graph" | "node" | "edge")
            && self.peek() == Some(&Tok::Sym('['))
        {
            self.attr_lists()?;
            return Ok(());
        }
        if self.peek() == Some(&Tok::Sym('=')) {
            self.next();
            self.id()?;
            return Ok(());
        }
        let mut chain = vec![first];
        while let Some(Tok::Arrow(directed)) = self.peek().cloned() {
            if directed != self.dot.directed {
                return Err("edge operator does not match graph kind".into());
            }
            self.next();
            chain.push(self.id()?);
        }
        let attrs = self.attr_lists()?;
        if chain.len() == 1 {
            self.dot.nodes.push((chain.pop().unwrap(), attrs));
        } else {
            for w in chain.windows(2) {
                self.dot.edges.push((w[0].clone(), w[1].clone()));
            }
        }
        Ok(())
    }
}

/// Parses the node/edge/attribute subset of the DOT language (no subgraphs
/// or ports), rejecting anything outside the grammar.
pub fn parse_dot(text: &str) -> Result<Dot, String> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        dot: Dot::default(),
    };
    let mut head = p.id()?;
    if head.eq_ignore_ascii_case("strict") {
        head = p.id()?;
    }
    p.dot.directed = match head.to_ascii_lowercase().as_str() {
        "digraph" => true,
        "graph" => false,
        _ => return Err(format!("expected graph or digraph, found {head}")),
    };
    if matches!(p.peek(), Some(Tok::Id(_))) {
        p.next();
    }
    p.expect_sym('{')?;
    while p.peek() != Some(&Tok::Sym('}')) {
        if p.peek().is_none() {
            return Err("unexpected end of input".into());
        }
        p.stmt()?;
        if p.peek() == Some(&Tok::Sym(';')) {
            p.next();
        }
    }
    p.next();
    if p.pos != p.toks.len() {
        return Err("trailing input after graph".into());
    }
    Ok(p.dot)
}
