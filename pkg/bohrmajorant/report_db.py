import os

import peewee as pv
from playhouse import signals
import json
from time import time

database = pv.SqliteDatabase(None)


class BaseModel(signals.Model):
    class Meta:
        database = database


class JSONField(pv.TextField):
    def db_value(self, value):
        if value is None:
            return None
        return json.dumps(value, sort_keys=True)

    def python_value(self, value):
        if value is None:
            return None
        return json.loads(value)


class Run(BaseModel):
    """
    CREATE TABLE run (
        id              integer primary key,
        created         integer not null,
          -- epoch seconds
        mod             integer not null,
          -- last modified, epoch seconds
        seed            integer not null,
        config          text not null,
          -- json of the reproducibility part of RunConfig
        summary         text
          -- json list of (theorem, r, holds, fails, inconclusive) rows
    );
    """
    created = pv.IntegerField(default=lambda: int(time()))
    mod = pv.IntegerField()         # autogenerated
    seed = pv.IntegerField()
    config = JSONField()
    summary = JSONField(null=True)


@signals.pre_save(sender=Run)
def run_pre_save(model_class, instance, created):
    instance.mod = int(time())


class ReportRecord(BaseModel):
    """
    CREATE TABLE reportrecord (
        id              integer primary key,
        run_id          integer not null,
        theorem         text not null,
        r               real not null,
        case_index      integer not null,
        verdict         text not null,
          -- holds | fails | inconclusive
        margin          real not null,
        witness         text
          -- json, kept for failing and inconclusive cases only
    );
    """
    run = pv.ForeignKeyField(Run, backref='reports')
    theorem = pv.TextField(index=True)
    r = pv.FloatField()
    case_index = pv.IntegerField()
    verdict = pv.TextField()
    margin = pv.FloatField()
    witness = JSONField(null=True)


def connect(path):
    if os.path.dirname(path):
        os.makedirs(os.path.dirname(path), exist_ok=True)
    database.init(path, pragmas={
        'journal_mode': 'wal'
    })
    database.create_tables([Run, ReportRecord])
    return database
