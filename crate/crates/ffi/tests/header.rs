use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/vincular.h")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header()).expect("build script writes the header");
    for symbol in [
        "typedef struct VincPermutation VincPermutation;",
        "typedef struct VincPattern VincPattern;",
        "VINC_STATUS_OK = 0",
        "VINC_MAP_PSI",
        "vinc_last_error_message(void)",
        "vinc_permutation_parse(",
        "vinc_count_occurrences(",
        "vinc_apply(",
        "vinc_verify(",
        "vinc_search_json(",
        "vinc_string_free(",
    ] {
        assert!(text.contains(symbol), "missing {symbol}");
    }
}

#[test]
fn header_compiles_as_c99() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("vincular-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"vincular.h\"\n\
         int main(void) {\n\
           VincPermutation *p = 0;\n\
           VincStatus s = vinc_permutation_parse(\"231\", &p);\n\
           vinc_permutation_free(p);\n\
           return s == VINC_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header().parent().unwrap())
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            Command::new(c)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .ok_or(())
}
