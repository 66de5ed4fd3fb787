//! JSON instance files: objects, systems and morphisms of one context.

use std::collections::BTreeMap;
use std::path::Path;

use pnbd_core::context::Carrier;
use pnbd_core::{Canonical, Context, ContextObject, Elem, Group, Morphism, Obj, PreNbdSystem};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub context: String,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub systems: BTreeMap<String, SystemSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    Points { points: Vec<String> },
    Group { group: GroupSpec },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Builtin(String),
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub object: String,
    /// Generator table `subobject ↦ subobject`, every subobject listed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Map<String, Value>>,
    /// Shorthand for a named system: `discrete`, `indiscrete` or `nu`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub dom: String,
    pub cod: String,
    pub map: Map<String, Value>,
}

/// A validated instance with every reference resolved.
#[derive(Clone, Debug)]
pub struct Instance {
    pub context: Context,
    pub objects: Vec<(String, Obj)>,
    pub systems: Vec<(String, PreNbdSystem)>,
    pub morphisms: Vec<(String, Morphism)>,
}

fn at<T>(path: &str, r: pnbd_core::Result<T>) -> Result<T> {
    r.map_err(|e| CliError::schema(path, e.to_string()))
}

fn string_value<'a>(path: &str, v: &'a Value) -> Result<&'a str> {
    v.as_str().ok_or_else(|| CliError::schema(path, "expected a string"))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text)?;
    Instance::from_file(&file)
}

pub fn load_instance(path: &Path) -> Result<Instance> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_instance(&text)
}

impl Instance {
    pub fn new(context: Context) -> Self {
        Instance { context, objects: Vec::new(), systems: Vec::new(), morphisms: Vec::new() }
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self> {
        let context = at("context", Context::parse(&file.context))?;
        let mut inst = Instance::new(context);
        for (name, spec) in &file.objects {
            let path = format!("objects.{name}");
            let obj = match (context, spec) {
                (Context::FinSet, ObjectSpec::Points { points }) => at(&path, ContextObject::finset(points))?,
                (Context::FinGrp, ObjectSpec::Group { group }) => {
                    let g = match group {
                        GroupSpec::Builtin(b) => at(&path, Group::builtin(b))?,
                        GroupSpec::Table { table, labels } => {
                            if table.len() > pnbd_core::group::MAX_TABLE_INPUT_ORDER {
                                return Err(CliError::schema(
                                    &path,
                                    format!(
                                        "Cayley tables are limited to order {}",
                                        pnbd_core::group::MAX_TABLE_INPUT_ORDER
                                    ),
                                ));
                            }
                            let labels =
                                labels.clone().unwrap_or_else(|| (0..table.len()).map(|i| i.to_string()).collect());
                            at(&path, Group::from_table(name, labels, table.clone()))?
                        }
                    };
                    at(&path, ContextObject::group(g))?
                }
                (Context::FinSet, _) => return Err(CliError::schema(path, "finset objects need \"points\"")),
                (Context::FinGrp, _) => return Err(CliError::schema(path, "fingrp objects need \"group\"")),
            };
            inst.objects.push((name.clone(), obj));
        }
        for (name, spec) in &file.systems {
            let path = format!("systems.{name}");
            let obj = inst
                .object(&spec.object)
                .ok_or_else(|| CliError::schema(format!("{path}.object"), format!("unknown object {:?}", spec.object)))?
                .clone();
            let sys = match (&spec.generators, &spec.kind) {
                (Some(_), Some(_)) => return Err(CliError::schema(path, "give either \"generators\" or \"kind\"")),
                (None, None) => return Err(CliError::schema(path, "missing \"generators\" or \"kind\"")),
                (None, Some(kind)) => match kind.as_str() {
                    "discrete" | "up" => PreNbdSystem::canonical(&obj, Canonical::Discrete),
                    "indiscrete" | "nabla" => PreNbdSystem::canonical(&obj, Canonical::Indiscrete),
                    "nu" => at(&path, PreNbdSystem::nu(&obj))?,
                    other => return Err(CliError::schema(format!("{path}.kind"), format!("unknown kind {other:?}"))),
                },
                (Some(table), None) => {
                    let l = obj.lattice();
                    let mut values: Vec<Option<Elem>> = vec![None; l.len()];
                    for (k, v) in table {
                        let kp = format!("{path}.generators.{k}");
                        let x = at(&kp, obj.parse(k))?;
                        let y = at(&kp, obj.parse(string_value(&kp, v)?))?;
                        if values[x as usize].replace(y).is_some() {
                            return Err(CliError::schema(kp, "subobject listed twice"));
                        }
                    }
                    let values = values
                        .into_iter()
                        .enumerate()
                        .map(|(i, v)| {
                            v.ok_or_else(|| {
                                CliError::schema(
                                    format!("{path}.generators"),
                                    format!("missing entry for subobject {:?}", obj.label(i as Elem)),
                                )
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    at(&path, PreNbdSystem::from_values(obj, values))?
                }
            };
            inst.systems.push((name.clone(), sys));
        }
        for (name, spec) in &file.morphisms {
            let path = format!("morphisms.{name}");
            let dom = inst
                .object(&spec.dom)
                .ok_or_else(|| CliError::schema(format!("{path}.dom"), format!("unknown object {:?}", spec.dom)))?
                .clone();
            let cod = inst
                .object(&spec.cod)
                .ok_or_else(|| CliError::schema(format!("{path}.cod"), format!("unknown object {:?}", spec.cod)))?
                .clone();
            let mut map: Vec<Option<usize>> = vec![None; dom.size()];
            for (k, v) in &spec.map {
                let kp = format!("{path}.map.{k}");
                let a = at(&kp, dom.point(k))?;
                let b = at(&kp, cod.point(string_value(&kp, v)?))?;
                if map[a].replace(b).is_some() {
                    return Err(CliError::schema(kp, "point listed twice"));
                }
            }
            let map = map
                .into_iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| {
                        CliError::schema(
                            format!("{path}.map"),
                            format!("missing image of point {:?}", dom.point_labels()[i]),
                        )
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            inst.morphisms.push((name.clone(), at(&path, Morphism::new(dom, cod, map))?));
        }
        Ok(inst)
    }

    pub fn object(&self, name: &str) -> Option<&Obj> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn system(&self, name: &str) -> Result<&PreNbdSystem> {
        self.systems
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| CliError::Usage(format!("unknown system {name:?}")))
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| CliError::Usage(format!("unknown morphism {name:?}")))
    }

    pub fn object_name(&self, obj: &Obj) -> Option<&str> {
        self.objects.iter().find(|(_, o)| pnbd_core::context::same_object(o, obj)).map(|(n, _)| n.as_str())
    }

    /// Adds an object unless an equal one is present; returns its name.
    pub fn add_object(&mut self, obj: &Obj) -> String {
        if let Some(n) = self.object_name(obj) {
            return n.to_string();
        }
        let name = fresh(&self.objects.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(), "X");
        self.objects.push((name.clone(), obj.clone()));
        self.objects.sort_by(|a, b| a.0.cmp(&b.0));
        name
    }

    /// Adds a system (and its object) under `name`, or a fresh name if taken.
    pub fn add_system(&mut self, name: &str, sys: &PreNbdSystem) -> String {
        self.add_object(sys.object());
        if let Some((n, _)) = self.systems.iter().find(|(_, s)| s == sys) {
            return n.clone();
        }
        let names: Vec<String> = self.systems.iter().map(|(n, _)| n.clone()).collect();
        let name = if names.iter().any(|n| n == name) { fresh(&names, name) } else { name.to_string() };
        self.systems.push((name.clone(), sys.clone()));
        self.systems.sort_by(|a, b| a.0.cmp(&b.0));
        name
    }

    /// Inserts a system under exactly `name`, replacing any previous one.
    pub fn put_system(&mut self, name: &str, sys: &PreNbdSystem) {
        self.add_object(sys.object());
        self.systems.retain(|(n, _)| n != name);
        self.systems.push((name.to_string(), sys.clone()));
        self.systems.sort_by(|a, b| a.0.cmp(&b.0));
    }

    /// Inserts a morphism under exactly `name`, replacing any previous one.
    pub fn put_morphism(&mut self, name: &str, f: &Morphism) {
        self.add_object(f.dom());
        self.add_object(f.cod());
        self.morphisms.retain(|(n, _)| n != name);
        self.morphisms.push((name.to_string(), f.clone()));
        self.morphisms.sort_by(|a, b| a.0.cmp(&b.0));
    }

    pub fn add_morphism(&mut self, name: &str, f: &Morphism) -> String {
        self.add_object(f.dom());
        self.add_object(f.cod());
        if let Some((n, _)) = self.morphisms.iter().find(|(_, g)| g == f) {
            return n.clone();
        }
        let names: Vec<String> = self.morphisms.iter().map(|(n, _)| n.clone()).collect();
        let name = if names.iter().any(|n| n == name) { fresh(&names, name) } else { name.to_string() };
        self.morphisms.push((name.clone(), f.clone()));
        self.morphisms.sort_by(|a, b| a.0.cmp(&b.0));
        name
    }

    /// Canonical file form: full generator tables in lattice order, maps in
    /// point order, builtin groups by name.
    pub fn to_file(&self) -> InstanceFile {
        let objects = self.objects.iter().map(|(n, o)| (n.clone(), object_spec(o))).collect();
        let systems = self
            .systems
            .iter()
            .map(|(n, s)| {
                let obj = s.object();
                let l = obj.lattice();
                let generators: Map<String, Value> =
                    l.elements().map(|x| (obj.label(x), Value::String(obj.label(s.g(x))))).collect();
                let object = self.object_name(obj).expect("system object registered").to_string();
                (n.clone(), SystemSpec { object, generators: Some(generators), kind: None })
            })
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .map(|(n, f)| {
                let (dl, cl) = (f.dom().point_labels(), f.cod().point_labels());
                let map = (0..f.dom().size()).map(|i| (dl[i].clone(), Value::String(cl[f.at(i)].clone()))).collect();
                let dom = self.object_name(f.dom()).expect("domain registered").to_string();
                let cod = self.object_name(f.cod()).expect("codomain registered").to_string();
                (n.clone(), MorphismSpec { dom, cod, map })
            })
            .collect();
        InstanceFile { context: self.context.name().to_string(), objects, systems, morphisms }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("instance serializes");
        s.push('\n');
        s
    }
}

fn fresh(names: &[String], stem: &str) -> String {
    (0..).map(|i| format!("{stem}{i}")).find(|c| !names.contains(c)).unwrap()
}

fn object_spec(obj: &Obj) -> ObjectSpec {
    match obj.carrier() {
        Carrier::Set(points) => ObjectSpec::Points { points: points.clone() },
        Carrier::Group(g) => {
            if Group::builtin(g.name()).map(|b| &b == g).unwrap_or(false) {
                return ObjectSpec::Group { group: GroupSpec::Builtin(g.name().to_string()) };
            }
            let n = g.order();
            let table = (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect();
            ObjectSpec::Group { group: GroupSpec::Table { table, labels: Some(g.labels().to_vec()) } }
        }
    }
}

/// A failing verdict as a replayable file: the morphism `f: (X,mu) → (Y,phi)`
/// plus the probe `h: (T,tau) → (Y,phi)` whose pullback is not closed.
pub fn witness_instance(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, w: &pnbd_core::Witness) -> Instance {
    let mut inst = Instance::new(f.dom().context());
    inst.put_morphism("f", f);
    inst.put_system("mu", mu);
    inst.put_system("phi", phi);
    inst.put_morphism("h", &w.probe.h);
    inst.put_system("tau", &w.probe.space);
    inst
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "context": "finset",
        "objects": {"X": {"points": ["a", "b"]}},
        "systems": {"up": {"object": "X", "generators": {"": "", "a": "a", "b": "b", "ab": "ab"}}}
    }"#;

    #[test]
    fn minimal_file_parses_and_round_trips() {
        let inst = parse_instance(MINIMAL).unwrap();
        assert_eq!(inst.systems.len(), 1);
        let text = inst.to_json();
        let again = parse_instance(&text).unwrap();
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn extensionality_violation_names_the_element() {
        let bad = MINIMAL.replace(r#""a": "a""#, r#""a": """#);
        let err = parse_instance(&bad).unwrap_err().to_string();
        assert!(err.contains("systems.up"), "{err}");
        assert!(err.contains("\"a\""), "{err}");
    }

    #[test]
    fn builtin_group_with_nu() {
        let text = r#"{"context": "fingrp", "objects": {"G": {"group": "S3"}},
                       "systems": {"nu": {"object": "G", "kind": "nu"}}}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.object("G").unwrap().lattice().len(), 6);
        let again = parse_instance(&inst.to_json()).unwrap();
        assert_eq!(again.systems[0].1, inst.systems[0].1);
    }

    #[test]
    fn dangling_references_are_reported() {
        let text = r#"{"context": "finset", "objects": {}, "systems": {"s": {"object": "Y", "kind": "discrete"}}}"#;
        let err = parse_instance(text).unwrap_err().to_string();
        assert!(err.starts_with("systems.s.object"), "{err}");
    }
}
