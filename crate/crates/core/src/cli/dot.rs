use crate::report::{Block, ClassReport, RepType};
use std::fmt::Write;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of one block: a node per simple (`dim=`), one edge per arrow
/// copy (`gen=`), relations in a leading comment.
pub fn block_dot(name: &str, class: &ClassReport, block: &Block) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quoted(name)).unwrap();
    writeln!(s, "  /* block {} of dim {}, radical {}, {:?}", block.label, block.dim, block.radical_dim, block.rep_type).unwrap();
    if block.quiver.relations.is_empty() {
        writeln!(s, "     relations: none").unwrap();
    } else {
        writeln!(s, "     relations:").unwrap();
        for r in &block.quiver.relations {
            writeln!(s, "       {}", r.replace("*/", "* /")).unwrap();
        }
    }
    writeln!(s, "  */").unwrap();
    let vertices: Vec<&String> = if block.quiver.vertices.is_empty() {
        block.simples.iter().collect()
    } else {
        block.quiver.vertices.iter().collect()
    };
    for v in vertices {
        let dim = class.simple(v).map_or(0, |l| l.dim);
        writeln!(s, "  {} [label={}, dim={dim}];", quoted(v), quoted(&format!("{v} ({dim})"))).unwrap();
    }
    for a in &block.quiver.arrows {
        for _ in 0..a.multiplicity {
            writeln!(
                s,
                "  {} -> {} [label={}, gen={}];",
                quoted(&a.from),
                quoted(&a.to),
                quoted(&a.generator),
                quoted(&a.generator)
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// `(file stem, text)` for each block of the class with index `k`.
pub fn class_dots(k: usize, class: &ClassReport, nonsemisimple_only: bool) -> Vec<(String, String)> {
    class
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| !nonsemisimple_only || b.rep_type != RepType::Semisimple)
        .map(|(i, b)| {
            let name = format!("class{k}_block{i}");
            let text = block_dot(&name, class, b);
            (name, text)
        })
        .collect()
}
