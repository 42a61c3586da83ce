#!/usr/bin/env python3
"""Realizing polygon triangulations from Dyck paths and rotating them.

The descent encoding drives an active-polygon algorithm: step i connects
the vertices at positions lambda_i and lambda_i + 2 and clips the vertex
between them.  Quiddity counts triangles at each vertex; cycles of coupled
diamonds land in a single rotation orbit of triangulations.
"""

from dyckfrieze import (
    complete_diamond,
    cycle_heads,
    minimal_cycle,
    parse_path,
    quiddity,
    realize,
    rotate,
    rotation_orbit,
    same_rotation_orbit,
    to_lambda,
    triangles,
    vector_to_triangulation,
)


def main():
    lam = to_lambda(parse_path("UDUDUUDD"))
    t = realize(lam)
    print(f"descent vector {lam} realizes {t.to_text()}")
    print(f"  faces: {triangles(t)}")
    print(f"  quiddity: {quiddity(t)}")
    print(f"  rotated by 2: {rotate(t, 2).to_text()}")
    print()

    v = (1, 2, 3)
    cycle = minimal_cycle(complete_diamond(v))
    images = [vector_to_triangulation(d.col1) for d in cycle.diamonds]
    print(f"cycle of {v} maps to triangulations:")
    for d, img in zip(cycle.diamonds, images):
        print(f"  {d.col1} -> {img.to_text()}   quiddity {quiddity(img)}")
    print(f"  pairwise same rotation orbit: "
          f"{all(same_rotation_orbit(images[0], x) for x in images[1:])}")
    print(f"  orbit size {len(rotation_orbit(images[0]))} equals period {cycle.p}")
    print()

    heads = cycle_heads(cycle)
    q = quiddity(images[0])
    print(f"heads {heads} repeated fill the quiddity {q} of the image")


if __name__ == "__main__":
    main()
