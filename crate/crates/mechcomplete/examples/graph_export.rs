//! Exports the reasoned causal graph as DOT text. The status legend matches
//! the edge colors: dark blue = active retrieved path, green = pruned,
//! orange = intrinsic (dotted while latent, solid once activated).

use std::path::Path;

use mechcomplete::reasoning::{export_graph, reason, ScenarioSpec};
use mechcomplete::skills::{SkillRegistry, DEFAULT_SKILL_FILE};

fn main() -> mechcomplete::Result<()> {
    let registry = SkillRegistry::from_json_str(DEFAULT_SKILL_FILE)?;
    let scenario = ScenarioSpec::rothbach();
    let model = reason(&registry, &scenario)?;
    let dot = export_graph(&model.graph);

    let out = Path::new("out/examples/graph_export");
    std::fs::create_dir_all(out)?;
    std::fs::write(out.join("causal.dot"), &dot)?;

    print!("{dot}");
    println!("// wrote {}", out.join("causal.dot").display());
    println!(
        "// render with: dot -Tsvg {} -o causal.svg",
        out.join("causal.dot").display()
    );
    Ok(())
}
