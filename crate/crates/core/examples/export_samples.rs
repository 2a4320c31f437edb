//! Writes the sample SSJ documents under `data/` that the command-line
//! examples in the README use.

use retracta::retract::{cell, REnv};
use retracta::sset::{build, Simplex};
use retracta::ssj;
use std::fs;
use std::path::Path;

fn main() {
    let dir = Path::new("data");
    fs::create_dir_all(dir).unwrap();
    let write = |name: &str, doc: &ssj::SsjDocument| {
        fs::write(dir.join(name), ssj::to_canonical_json(doc)).unwrap();
    };

    write("circle.ssj", &ssj::space_to_doc("circle", &build::circle().unwrap(), None));
    write("rp2.ssj", &ssj::space_to_doc("rp2", &build::rp2().unwrap(), None));
    write("torus.ssj", &ssj::space_to_doc("torus", &build::torus().unwrap(), None));
    write(
        "wedge-two-circles.ssj",
        &ssj::space_to_doc("wedge-two-circles", &build::wedge_two_circles().unwrap(), None),
    );

    let (w, a) = build::double_cover_circle().unwrap();
    write("double-cover.ssj", &ssj::space_to_doc("double-cover", &w, Some(&a)));

    // a retractive object: the free 1-cell over the circle
    let env = REnv::plain(build::circle().unwrap());
    let e = env.w.find_gen("e").unwrap();
    let y = cell(&env, &Simplex::gen(e, 1)).unwrap();
    write("cell-over-circle.ssj", &ssj::robj_to_doc("cell-over-circle", &env, &y));
}
