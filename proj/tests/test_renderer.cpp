#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "rt/ppm.hpp"
#include "rt/renderer.hpp"

using namespace rt;

namespace {

PinholeCamera demo_camera(int width, int height) {
    return {-1.0, 1.0, -1.0, 1.0, 1.0, {width, height},
            {0.0, 0.0, 5.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}};
}

std::string ppm_string(const FrameBuffer& buf) {
    std::ostringstream out;
    write_ppm(out, buf);
    return out.str();
}

}  // namespace

TEST_CASE("default scene") {
    const Scene scene = default_scene();
    REQUIRE(scene.triangles.size() == 1);
    CHECK(scene.triangles[0].color == Vec3{1.0, 0.0, 0.0});
    CHECK(scene.triangles[0].a == Vec3{-2.5, -2.5, 0.0});
    CHECK(scene.triangles[0].b == Vec3{2.5, -2.5, 0.0});
    CHECK(scene.triangles[0].c == Vec3{0.0, 2.5, 0.0});
    CHECK(scene.background == Vec3::zero());
}

TEST_CASE("shade_pixel") {
    SUBCASE("centre pixel of the demo render is red") {
        CHECK(shade_pixel(demo_camera(65, 65), default_scene(), 33, 33) ==
              Vec3{1.0, 0.0, 0.0});
    }

    SUBCASE("empty scene returns the background") {
        Scene scene;
        scene.background = {0.25, 0.5, 0.75};
        const PinholeCamera cam = demo_camera(3, 3);
        for (int j = 1; j <= 3; ++j)
            for (int i = 1; i <= 3; ++i) CHECK(shade_pixel(cam, scene, i, j) == scene.background);
    }

    SUBCASE("triangle behind the camera is invisible") {
        Scene scene = default_scene();
        for (Triangle& tri : scene.triangles) {
            tri.a.z = 10.0;  // camera sits at z = 5 looking toward -z
            tri.b.z = 10.0;
            tri.c.z = 10.0;
        }
        CHECK(shade_pixel(demo_camera(65, 65), scene, 33, 33) == scene.background);
    }

    SUBCASE("out-of-range pixel throws") {
        CHECK_THROWS_AS(shade_pixel(demo_camera(4, 4), default_scene(), 0, 1),
                        std::out_of_range);
        CHECK_THROWS_AS(shade_pixel(demo_camera(4, 4), default_scene(), 1, 5),
                        std::out_of_range);
    }
}

TEST_CASE("integrate") {
    SUBCASE("1x1 empty scene is a single background pixel") {
        Scene scene;
        scene.background = {0.1, 0.2, 0.3};
        const FrameBuffer buf = integrate({1, 1}, demo_camera(1, 1), scene);
        CHECK(buf.width() == 1);
        CHECK(buf.height() == 1);
        CHECK(buf.pixel(0, 0) == scene.background);
    }

    SUBCASE("resolution must match the camera") {
        CHECK_THROWS_AS(integrate({2, 2}, demo_camera(4, 4), Scene{}),
                        std::invalid_argument);
    }

    SUBCASE("jobs must be positive") {
        CHECK_THROWS_AS(integrate({2, 2}, demo_camera(2, 2), Scene{}, 0),
                        std::invalid_argument);
    }

    SUBCASE("rows run top to bottom") {
        // camera at the origin looking down -z; one triangle covering the
        // upper half of the window only
        const PinholeCamera cam{-1.0, 1.0, -1.0, 1.0, 1.0, {2, 2},
                                {0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, -1.0}};
        Scene scene;
        scene.triangles.push_back(
            {{-100.0, 0.0, -1.0}, {100.0, 0.0, -1.0}, {0.0, 100.0, -1.0}, {0.0, 1.0, 0.0}});
        const FrameBuffer buf = integrate({2, 2}, cam, scene);
        CHECK(buf.pixel(0, 0) == Vec3{0.0, 1.0, 0.0});  // top row hit
        CHECK(buf.pixel(1, 0) == Vec3{0.0, 1.0, 0.0});
        CHECK(buf.pixel(0, 1) == scene.background);  // bottom row missed
        CHECK(buf.pixel(1, 1) == scene.background);
    }

    SUBCASE("every stored pixel equals a fresh shade_pixel call") {
        const PinholeCamera cam = demo_camera(16, 16);
        const Scene scene = default_scene();
        const FrameBuffer buf = integrate({16, 16}, cam, scene, 3);
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c)
                CHECK(buf.pixel(c, r) == shade_pixel(cam, scene, c + 1, 16 - r));
    }

    SUBCASE("background completeness") {
        Scene scene;
        scene.background = {0.9, 0.8, 0.7};
        const FrameBuffer buf = integrate({8, 5}, demo_camera(8, 5), scene, 2);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 8; ++c) CHECK(buf.pixel(c, r) == scene.background);
    }

    SUBCASE("occluded triangle changes nothing") {
        const PinholeCamera cam{-1.0, 1.0, -1.0, 1.0, 1.0, {8, 8},
                                {0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, -1.0}};
        Scene near_only;
        near_only.triangles.push_back(
            {{-50.0, -50.0, -2.0}, {50.0, -50.0, -2.0}, {0.0, 75.0, -2.0}, {1.0, 0.0, 0.0}});
        Scene both = near_only;
        both.triangles.push_back(
            {{-50.0, -50.0, -4.0}, {50.0, -50.0, -4.0}, {0.0, 75.0, -4.0}, {0.0, 1.0, 0.0}});

        const FrameBuffer a = integrate({8, 8}, cam, near_only);
        const FrameBuffer b = integrate({8, 8}, cam, both);
        CHECK(a == b);
    }

    SUBCASE("worker count never changes the output") {
        const PinholeCamera cam = demo_camera(31, 17);
        const Scene scene = default_scene();
        const FrameBuffer serial = integrate({31, 17}, cam, scene, 1);
        for (const int jobs : {2, 8, 64}) {
            const FrameBuffer parallel = integrate({31, 17}, cam, scene, jobs);
            CHECK(serial == parallel);
            CHECK(ppm_string(serial) == ppm_string(parallel));
        }
        // repeated runs are identical too
        CHECK(integrate({31, 17}, cam, scene, 8) == serial);
    }

    SUBCASE("more jobs than rows") {
        const FrameBuffer buf = integrate({4, 3}, demo_camera(4, 3), default_scene(), 16);
        CHECK(buf.height() == 3);
    }
}

TEST_CASE("render uses the config resolution and jobs") {
    const RenderConfig config{demo_camera(9, 9), default_scene(), 2};
    const FrameBuffer buf = render(config);
    CHECK(buf.width() == 9);
    CHECK(buf.height() == 9);
    CHECK(buf.pixel(4, 4) == Vec3{1.0, 0.0, 0.0});
}

TEST_CASE("1x1 render shoots the centre ray") {
    const FrameBuffer buf = integrate({1, 1}, demo_camera(1, 1), default_scene());
    CHECK(buf.pixel(0, 0) == Vec3{1.0, 0.0, 0.0});
}
