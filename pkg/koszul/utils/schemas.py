"""marshmallow schemas for module files, chart documents and CLI config files."""

from marshmallow import Schema, ValidationError, fields, validate, validates_schema

from koszul.utils.constants import FORMAT_VERSIONS


class GeneratorSchema(Schema):
    id = fields.String(required=True, validate=validate.Regexp(r'^[A-Za-z_][A-Za-z0-9_]*$'))
    degree = fields.Integer(required=True, validate=validate.Range(max=0))


class DifferentialTermSchema(Schema):
    R = fields.Integer(validate=validate.Range(min=1))
    v = fields.Integer(validate=validate.Range(min=0))
    gen = fields.String(required=True)

    @validates_schema
    def validate_operator(self, data, **kwargs):
        if ('R' in data) == ('v' in data):
            raise ValidationError("exactly one of 'R' or 'v' is required", 'R')


class ModuleFileSchema(Schema):
    format = fields.Integer(required=True, validate=validate.Equal(FORMAT_VERSIONS['MODULE']))
    name = fields.String(required=True, validate=validate.Length(min=1))
    generators = fields.List(fields.Nested(GeneratorSchema), required=True)
    differential = fields.Dict(
        keys=fields.String(),
        values=fields.List(fields.Nested(DifferentialTermSchema)),
        load_default=dict,
    )


class ChartClassSchema(Schema):
    id = fields.String(required=True)
    x = fields.Integer(required=True)
    s = fields.Integer(required=True, validate=validate.Range(min=0))
    weight = fields.Integer(required=True, validate=validate.Range(min=0))
    label = fields.String(required=True)


class ChartLineSchema(Schema):
    kind = fields.String(required=True, validate=validate.Regexp(r'^v\d+$'))
    from_id = fields.String(required=True, data_key='from')
    to_id = fields.String(required=True, data_key='to')


class ChartDifferentialSchema(Schema):
    page = fields.Integer(required=True, validate=validate.Range(min=1))
    from_id = fields.String(required=True, data_key='from')
    to_id = fields.String(required=True, data_key='to')


class ChartMetadataSchema(Schema):
    n = fields.Integer(required=True)
    module = fields.String(required=True)
    window = fields.Dict(required=True)
    engine_version = fields.String(required=True)
    mode = fields.String(load_default='cohomology')
    notes = fields.List(fields.String(), load_default=list)


class ChartDocumentSchema(Schema):
    chart_format = fields.Integer(
        required=True, data_key='chart-format', validate=validate.Equal(FORMAT_VERSIONS['CHART'])
    )
    classes = fields.List(fields.Nested(ChartClassSchema), required=True)
    lines = fields.List(fields.Nested(ChartLineSchema), load_default=list)
    differentials = fields.List(fields.Nested(ChartDifferentialSchema), load_default=list)
    metadata = fields.Nested(ChartMetadataSchema, required=True)


class CliConfigSchema(Schema):
    n = fields.Integer(validate=validate.Range(min=-1))
    x_min = fields.Integer()
    x_max = fields.Integer()
    s_max = fields.Integer(validate=validate.Range(min=0))
    weight_max = fields.Integer(allow_none=True, validate=validate.Range(min=0))
    module = fields.String()
    format = fields.String(validate=validate.OneOf(['json', 'text', 'svg']))
    out = fields.String(allow_none=True)
    log_level = fields.String(validate=validate.OneOf(['DEBUG', 'INFO', 'WARNING', 'ERROR']))

    @validates_schema
    def validate_range(self, data, **kwargs):
        if 'x_min' in data and 'x_max' in data and data['x_min'] > data['x_max']:
            raise ValidationError("x_min must not exceed x_max", 'x_min')
