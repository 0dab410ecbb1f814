//! Structural JSON-schema checker for the keyword subset used in
//! `docs/schemas`: type, const, enum, properties, required,
//! additionalProperties (boolean), items, minItems, maxItems, minimum,
//! exclusiveMinimum, exclusiveMaximum, oneOf and `$ref` to sibling files or
//! `#/$defs/…`.

use std::collections::HashMap;
use std::path::PathBuf;

use serde_json::Value;

pub struct Schemas {
    docs: HashMap<String, Value>,
}

impl Schemas {
    pub fn load() -> Self {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas");
        let mut docs = HashMap::new();
        for entry in std::fs::read_dir(&dir).expect("schema directory") {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
            docs.insert(name, doc);
        }
        Schemas { docs }
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.docs.keys()
    }

    /// Errors from validating `inst` against `<file>`; empty when valid.
    pub fn validate(&self, file: &str, inst: &Value) -> Vec<String> {
        let mut errs = Vec::new();
        let root = self.docs.get(file).unwrap_or_else(|| panic!("no schema {file}"));
        self.check(file, root, inst, "$", &mut errs);
        errs
    }

    fn resolve<'a>(&'a self, doc: &'a str, reference: &str) -> (&'a str, &'a Value) {
        let (file, frag) = reference.split_once('#').unwrap_or((reference, ""));
        let file: &str = if file.is_empty() {
            doc
        } else {
            self.docs.get_key_value(file).unwrap_or_else(|| panic!("unresolved $ref {reference}")).0
        };
        let mut node = &self.docs[file];
        for part in frag.split('/').filter(|p| !p.is_empty()) {
            node = node.get(part).unwrap_or_else(|| panic!("unresolved $ref {reference}"));
        }
        (file, node)
    }

    fn check(&self, doc: &str, s: &Value, inst: &Value, at: &str, errs: &mut Vec<String>) {
        let Some(s) = s.as_object() else {
            panic!("schema node at {at} is not an object");
        };
        for key in s.keys() {
            assert!(KNOWN.contains(&key.as_str()), "{doc}: unsupported keyword '{key}'");
        }
        if let Some(r) = s.get("$ref").and_then(Value::as_str) {
            let (d, node) = self.resolve(doc, r);
            self.check(d, node, inst, at, errs);
        }
        if let Some(t) = s.get("type").and_then(Value::as_str) {
            if !has_type(inst, t) {
                errs.push(format!("{at}: expected {t}, got {inst}"));
                return;
            }
        }
        if let Some(c) = s.get("const") {
            if !json_eq(c, inst) {
                errs.push(format!("{at}: expected const {c}"));
            }
        }
        if let Some(e) = s.get("enum").and_then(Value::as_array) {
            if !e.iter().any(|v| json_eq(v, inst)) {
                errs.push(format!("{at}: {inst} not in {}", Value::Array(e.clone())));
            }
        }
        if let Some(x) = inst.as_f64() {
            let bound = |k: &str| s.get(k).and_then(Value::as_f64);
            if bound("minimum").is_some_and(|m| x < m) {
                errs.push(format!("{at}: {x} below minimum"));
            }
            if bound("exclusiveMinimum").is_some_and(|m| x <= m) {
                errs.push(format!("{at}: {x} not above exclusiveMinimum"));
            }
            if bound("exclusiveMaximum").is_some_and(|m| x >= m) {
                errs.push(format!("{at}: {x} not below exclusiveMaximum"));
            }
        }
        if let Some(obj) = inst.as_object() {
            let props = s.get("properties").and_then(Value::as_object);
            for req in s.get("required").and_then(Value::as_array).into_iter().flatten() {
                let req = req.as_str().unwrap();
                if !obj.contains_key(req) {
                    errs.push(format!("{at}: missing '{req}'"));
                }
            }
            for (k, v) in obj {
                match props.and_then(|p| p.get(k)) {
                    Some(sub) => self.check(doc, sub, v, &format!("{at}.{k}"), errs),
                    None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                        errs.push(format!("{at}: unexpected property '{k}'"))
                    }
                    None => {}
                }
            }
        }
        if let Some(arr) = inst.as_array() {
            let len = arr.len() as u64;
            if s.get("minItems").and_then(Value::as_u64).is_some_and(|m| len < m) {
                errs.push(format!("{at}: fewer than minItems"));
            }
            if s.get("maxItems").and_then(Value::as_u64).is_some_and(|m| len > m) {
                errs.push(format!("{at}: more than maxItems"));
            }
            if let Some(items) = s.get("items") {
                for (i, v) in arr.iter().enumerate() {
                    self.check(doc, items, v, &format!("{at}[{i}]"), errs);
                }
            }
        }
        if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
            let matching = alts
                .iter()
                .filter(|alt| {
                    let mut sub = Vec::new();
                    self.check(doc, alt, inst, at, &mut sub);
                    sub.is_empty()
                })
                .count();
            if matching != 1 {
                errs.push(format!("{at}: {matching} oneOf branches match"));
            }
        }
    }
}

const KNOWN: &[&str] = &[
    "$schema",
    "$id",
    "$defs",
    "$ref",
    "title",
    "description",
    "type",
    "const",
    "enum",
    "properties",
    "required",
    "additionalProperties",
    "items",
    "minItems",
    "maxItems",
    "minimum",
    "exclusiveMinimum",
    "exclusiveMaximum",
    "oneOf",
];

fn has_type(v: &Value, t: &str) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64() || v.as_f64().is_some_and(|x| x.fract() == 0.0),
        other => panic!("unsupported type {other}"),
    }
}

/// JSON equality with 1 == 1.0.
fn json_eq(a: &Value, b: &Value) -> bool {
    match (a.as_f64(), b.as_f64()) {
        (Some(x), Some(y)) => x == y,
        _ => a == b,
    }
}
