use bhl::double::drinfeld_double;
use bhl::examples::{group_algebra, hmnd, sweedler, FamilyParams};
use bhl::io::{
    algebra_to_text, builtin_algebra, load_algebra, load_module, parse_algebra, yd_module_to_text, LoadError,
};
use bhl::yd::adjoint_yd_module;

fn scratch_dir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bhl-io-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn algebra_text_round_trip() {
    for h in [
        group_algebra(3).unwrap(),
        sweedler(),
        hmnd(&FamilyParams::new(2, &[1], None)).unwrap(),
        drinfeld_double(&group_algebra(2).unwrap()).unwrap().hopf,
    ] {
        let text = algebra_to_text(&h);
        let back = parse_algebra(&text, "x").unwrap();
        assert!(back.structure_eq(&h), "{}", h.name);
        assert_eq!(algebra_to_text(&back), text);
    }
}

#[test]
fn antipode_inverse_may_be_left_to_the_loader() {
    let h = sweedler();
    let text = algebra_to_text(&h);
    let cut = text.rfind(&h.antipode_inv.to_text()).unwrap();
    let auto = format!("{}auto\n", &text[..cut]);
    assert!(parse_algebra(&auto, "x").unwrap().structure_eq(&h));
}

#[test]
fn parse_errors_carry_byte_offsets() {
    let err = parse_algebra("conductor=1\ndim=x\n", "x").unwrap_err().to_string();
    assert!(err.contains("12"), "{err}");
    let text = algebra_to_text(&sweedler());
    let broken = text.replacen("dim=4", "dim=5", 1);
    assert!(parse_algebra(&broken, "x").is_err());
    let truncated = &text[..text.len() / 2];
    assert!(parse_algebra(truncated, "x").is_err());
}

#[test]
fn builtin_names() {
    assert!(builtin_algebra("sweedler").unwrap().structure_eq(&sweedler()));
    assert_eq!(builtin_algebra("kZ5").unwrap().dim, 5);
    assert_eq!(builtin_algebra("hmnd:3:1,1").unwrap().dim, 24);
    assert!(builtin_algebra("nope").is_err());
    assert!(matches!(load_algebra("/nonexistent/file.alg"), Err(LoadError::Io(_))));
}

#[test]
fn module_files_round_trip() {
    let dir = scratch_dir("module");
    let h = sweedler();
    std::fs::write(dir.join("sw.alg"), algebra_to_text(&h)).unwrap();
    let m = adjoint_yd_module(&h);
    let path = dir.join("adj.mod");
    std::fs::write(&path, yd_module_to_text(&m, "sw.alg")).unwrap();
    let back = load_module(path.to_str().unwrap(), &h).unwrap();
    assert!(back.yd().unwrap().structure_eq(&m));
    assert!(back.check().all_pass());
    std::fs::write(&path, "algebra=sw.alg\nvariant=XX\n").unwrap();
    assert!(matches!(load_module(path.to_str().unwrap(), &h), Err(LoadError::Parse(_))));
    std::fs::remove_dir_all(dir).unwrap();
}
