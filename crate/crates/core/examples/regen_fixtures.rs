//! Regenerates the checked-in fixture files from the fixture builders:
//! `cargo run --example regen_fixtures`. The `fixture_files_in_sync`
//! integration test fails when the files drift from the builders.

use std::path::Path;

use floerkit::fixtures;
use floerkit::heegaard::{build_model_diagram, ModelVariant};
use floerkit::io::{emit_cfk_bifiltered, emit_cfk_hat, emit_diagram};

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir)?;

    let write = |name: &str, text: String| -> std::io::Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
        Ok(())
    };

    write("unknot.cfk", emit_cfk_bifiltered(&fixtures::unknot()))?;
    write("unknot_hat.cfk", emit_cfk_hat(&fixtures::unknot_hat()))?;
    write("trefoil_right.cfk", emit_cfk_bifiltered(&fixtures::trefoil_right()))?;
    write("trefoil_left.cfk", emit_cfk_bifiltered(&fixtures::trefoil_left()))?;
    write("trefoil_right_dual.cfk", emit_cfk_hat(&fixtures::trefoil_right_dual_hat()))?;
    write("trefoil_left_dual.cfk", emit_cfk_hat(&fixtures::trefoil_left_dual_hat()))?;
    write("trefoil_right_dual_sq.cfk", emit_cfk_hat(&fixtures::trefoil_right_dual_square()))?;
    write("trefoil_left_dual_sq.cfk", emit_cfk_hat(&fixtures::trefoil_left_dual_square()))?;
    write("trefoil_mixed_dual.cfk", emit_cfk_hat(&fixtures::trefoil_mixed_dual_tensor()))?;

    for g in 1..=3 {
        let model = build_model_diagram(g, ModelVariant::TwiceWound);
        write(&format!("model_g{g}.dgm"), emit_diagram(&model.diagram))?;
    }
    let once = build_model_diagram(1, ModelVariant::OnceWound);
    write("model_g1_once_wound.dgm", emit_diagram(&once.diagram))?;

    Ok(())
}
