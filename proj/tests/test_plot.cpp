#include <cstdio>
#include <vector>

#include "doctest.h"
#include "svcvv/errors.hpp"
#include "svcvv/eval.hpp"
#include "svcvv/image.hpp"
#include "svcvv/plot.hpp"

using namespace svcvv;

TEST_CASE("canvas primitives stay inside the raster") {
    Canvas c(40, 30, Rgb{255, 255, 255});
    c.line(-10, -10, 100, 100, Rgb{0, 0, 0});
    c.fill_rect(35, 25, 20, 20, Rgb{10, 20, 30});
    c.text(30, 28, "CLIPPED TEXT RUNS OFF", Rgb{0, 0, 0}, 1);
    CHECK(c.image().width == 40);
    CHECK(c.image().height == 30);
    // corner pixel covered by the diagonal
    const std::size_t i = 0;
    CHECK(c.image().rgb[i] == 0);
}

TEST_CASE("text metrics scale linearly") {
    const int w1 = Canvas::text_width("MSI", 1);
    const int w2 = Canvas::text_width("MSI", 2);
    CHECK(w2 == 2 * w1);
    CHECK(Canvas::text_height(2) == 14);
    CHECK(w1 == 3 * 6 - 1);  // 5 px glyphs with 1 px gaps
}

TEST_CASE("line chart writes a well-formed image") {
    std::vector<double> t, y;
    for (int k = 0; k < 500; ++k) {
        t.push_back(0.01 * k);
        y.push_back(k * k * 0.001);
    }
    const std::string path = "chart_test.ppm";
    plot_line_chart(path, "predicted incidence", "t [s]", "msi [%]", t, y);
    int w = 0, h = 0;
    probe_ppm(path, w, h);
    CHECK(w == 900);
    CHECK(h == 480);
    std::remove(path.c_str());

    std::vector<double> bad{1.0};
    CHECK_THROWS_AS(plot_line_chart(path, "x", "t", "y", bad, y), InputError);
    CHECK_THROWS_AS(plot_line_chart(path, "x", "t", "y", std::vector<double>{}, std::vector<double>{}),
                    InputError);
}

TEST_CASE("evaluation report renders confusion counts and metric bars") {
    ConfusionMatrix cm;
    cm.tp = 12;
    cm.fn = 3;
    cm.fp = 2;
    cm.tn = 4;
    const std::string path = "eval_plot_test.ppm";
    plot_eval_report(path, cm, metrics(cm), "measure=mean n=21");
    int w = 0, h = 0;
    probe_ppm(path, w, h);
    CHECK(w == 680);
    CHECK(h == 420);
    std::remove(path.c_str());

    // undefined metrics must still render (as gaps), not crash
    plot_eval_report(path, ConfusionMatrix{}, metrics(ConfusionMatrix{}), "empty cohort");
    probe_ppm(path, w, h);
    CHECK(w == 680);
    std::remove(path.c_str());
}
