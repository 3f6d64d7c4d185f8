"""FastAPI service wrapping the engine.

Count tables are process-wide caches, so a long-running service amortizes
table construction across requests; all handlers are read-only once the
tables exist.
"""

from __future__ import annotations

import mpmath
from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse

from .. import datasets, intervals, partitions, profiles, reproduce, sampling
from ..errors import ResourceLimitError
from . import schemas


def _assessment_out(a: profiles.Assessment) -> schemas.AssessmentOut:
    return schemas.AssessmentOut(
        name=a.scholar.name,
        citations=a.scholar.citations,
        h=a.scholar.h,
        estimate=a.estimate,
        estimate_display=round(a.estimate, 1),
        interval=schemas.IntervalCells(
            low=a.interval.low,
            high=a.interval.high,
            mass=a.interval.mass,
            rule=a.interval.rule,
            epsilon=a.interval.epsilon,
        ),
        in_interval=a.in_interval,
        anomaly=a.anomaly,
        distance=a.distance,
        ratio=a.ratio,
        shortfall_percent=None if a.ratio is None else (1 - a.ratio) * 100,
        hirsch_a=a.hirsch_a,
        revised=_assessment_out(a.revised) if a.revised is not None else None,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="durfee engine",
        description="Exact h-index distributions for citation counts under the "
        "uniform random partition model.",
        version="0.1.0",
    )

    @app.exception_handler(ResourceLimitError)
    async def _resource_limit(request, exc):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def _value_error(request, exc):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": app.version}

    @app.get("/partitions/count/{n}", response_model=schemas.PartitionCountOut)
    def partition_count(n: int):
        count = partitions.partition_count(n)
        if n >= 1:
            hr = partitions.hardy_ramanujan_estimate(n)
            with mpmath.workdps(20):
                hr_str = mpmath.nstr(hr, 17)
                ratio = float(hr / count)
        else:
            hr_str, ratio = "", None
        return schemas.PartitionCountOut(n=n, count=count, hardy_ramanujan=hr_str, ratio=ratio)

    @app.get("/durfee/distribution", response_model=schemas.DistributionOut)
    def distribution(n: int = Query(ge=0)):
        dist = intervals.durfee_distribution(n)
        return schemas.DistributionOut(
            n=n,
            max_h=intervals.max_h(n),
            total=dist.total,
            counts=list(dist.counts.counts),
            probabilities=list(dist.probabilities),
            mode=intervals.mode_h(n),
        )

    @app.get("/durfee/interval", response_model=schemas.IntervalOut)
    def interval(
        n: int = Query(ge=0),
        epsilon: float = intervals.DEFAULT_EPSILON,
        rule: schemas.Rule = intervals.RULE_SYMMETRIC,
    ):
        ci = intervals.confidence_interval(n, epsilon, rule=rule)
        estimate = intervals.rule_of_thumb(n)
        return schemas.IntervalOut(
            n=n,
            epsilon=ci.epsilon,
            rule=ci.rule,
            low=ci.low,
            high=ci.high,
            mass=ci.mass,
            mode=intervals.mode_h(n),
            estimate=estimate.value,
            estimate_display=estimate.display,
        )

    @app.get("/durfee/tail", response_model=schemas.TailOut)
    def tail(n: int = Query(ge=0), t: int = Query(ge=0)):
        exact = intervals.tail_probability_exact(n, t)
        return schemas.TailOut(
            n=n,
            t=t,
            probability=float(exact),
            display=intervals.format_probability(exact),
        )

    @app.get("/durfee/estimate", response_model=schemas.EstimateOut)
    def estimate(n: int = Query(ge=0)):
        est = intervals.rule_of_thumb(n)
        return schemas.EstimateOut(
            n=n,
            estimate=est.value,
            estimate_display=est.display,
            max_h=intervals.max_h(n),
        )

    @app.get("/durfee/concentration", response_model=schemas.ConcentrationOut)
    def concentration(n: int = Query(ge=1), epsilon: float = Query(gt=0)):
        mu = intervals.rule_of_thumb(n).value
        return schemas.ConcentrationOut(
            n=n,
            epsilon=epsilon,
            mu=mu,
            window_low=(1 - epsilon) * mu,
            window_high=(1 + epsilon) * mu,
            mass=intervals.concentration_mass(n, epsilon),
        )

    @app.post("/profiles/assess", response_model=schemas.AssessmentOut)
    def assess_scholar(req: schemas.AssessRequest):
        record = profiles.ScholarRecord(
            name=req.scholar.name,
            citations=req.scholar.citations,
            h=req.scholar.h,
            citations_nonbook=req.scholar.citations_nonbook,
            h_nonbook=req.scholar.h_nonbook,
        )
        return _assessment_out(profiles.assess(record, req.epsilon, rule=req.rule))

    @app.post("/profiles/analyze", response_model=schemas.ProfileAnalyzeOut)
    def analyze_profiles(req: schemas.ProfileAnalyzeRequest):
        out = []
        for item in req.profiles:
            partition = profiles.Partition.from_citations(item.citations_per_paper)
            h = profiles.h_index(partition)
            record = profiles.ScholarRecord(
                name=item.name,
                citations=partition.size,
                h=h,
                full_profile=partition,
            )
            out.append(
                schemas.ProfileAssessmentOut(
                    name=item.name,
                    n_papers=partition.n_papers,
                    citations=partition.size,
                    h=h,
                    assessment=_assessment_out(
                        profiles.assess(record, req.epsilon, rule=req.rule)
                    ),
                )
            )
        return schemas.ProfileAnalyzeOut(profiles=out)

    @app.post("/cohort/analyze", response_model=schemas.CohortOut)
    def analyze(req: schemas.CohortRequest):
        records = [
            profiles.ScholarRecord(
                name=s.name,
                citations=s.citations,
                h=s.h,
                citations_nonbook=s.citations_nonbook,
                h_nonbook=s.h_nonbook,
            )
            for s in req.records
        ]
        report = profiles.analyze_cohort(records, req.epsilon, rule=req.rule)
        return schemas.CohortOut(
            assessments=[_assessment_out(a) for a in report.assessments],
            pearson_r=report.pearson_r,
            pearson_error=report.pearson_error,
            pearson_r_nonbook=report.pearson_r_nonbook,
            pearson_nonbook_error=report.pearson_nonbook_error,
            scatter_points=report.scatter_points,
            scatter_points_nonbook=report.scatter_points_nonbook,
            out_of_interval=[a.scholar.name for a in report.out_of_interval],
        )

    @app.post("/sampler/run", response_model=schemas.SampleOut)
    def run_sampler(req: schemas.SampleRequest):
        config = sampling.SamplerConfig(n=req.n, seed=req.seed, method=req.method)
        empirical = sampling.empirical_durfee_distribution(config, req.samples)
        tv = None
        if req.compare_exact:
            tv = sampling.total_variation(empirical, intervals.durfee_distribution(req.n))
        return schemas.SampleOut(
            n=req.n,
            samples=req.samples,
            seed=req.seed,
            method=req.method,
            rng=empirical.rng,
            histogram=empirical.histogram,
            frequencies=empirical.frequencies,
            tv_distance=tv,
        )

    @app.get("/reproduce/{target}", response_model=schemas.ReproduceOut)
    def reproduce_target(target: str):
        if target not in datasets.TARGETS:
            raise HTTPException(
                status_code=404,
                detail=f"unknown target {target!r}, expected one of {datasets.TARGETS}",
            )
        return schemas.ReproduceOut(**reproduce.reproduce(target))

    @app.get("/datasets/{target}", response_model=schemas.CohortOut)
    def bundled_cohort(
        target: str,
        epsilon: float = intervals.DEFAULT_EPSILON,
        rule: schemas.Rule = intervals.RULE_SYMMETRIC,
    ):
        if target not in datasets.COHORT_TARGETS:
            raise HTTPException(
                status_code=404,
                detail=f"unknown cohort {target!r}, expected one of {datasets.COHORT_TARGETS}",
            )
        report = profiles.analyze_cohort(datasets.cohort_records(target), epsilon, rule=rule)
        return schemas.CohortOut(
            assessments=[_assessment_out(a) for a in report.assessments],
            pearson_r=report.pearson_r,
            pearson_error=report.pearson_error,
            pearson_r_nonbook=report.pearson_r_nonbook,
            pearson_nonbook_error=report.pearson_nonbook_error,
            scatter_points=report.scatter_points,
            scatter_points_nonbook=report.scatter_points_nonbook,
            out_of_interval=[a.scholar.name for a in report.out_of_interval],
        )

    return app


app = create_app()
