"""
Instances Models
Generated or uploaded instance files with their family parameters
"""

from django.core.exceptions import ValidationError
from django.db import models
import uuid

from .fileformat import read_instance, write_instance
from .generators import CostMode, Family, InstanceSpec, generate, instance_id, parameter_comment


class Instance(models.Model):
    """
    One stored instance; ``content`` holds the instance file text
    """
    SOURCE_CHOICES = [
        ('GENERATED', 'Generated'),
        ('UPLOADED', 'Uploaded'),
    ]

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    name = models.CharField(max_length=255, help_text="Instance id such as incomplete-n8-d0.5-ctp-s3")
    source = models.CharField(max_length=20, choices=SOURCE_CHOICES, default='UPLOADED')
    family = models.CharField(max_length=20, choices=Family.choices, blank=True, default='')
    cost_mode = models.CharField(max_length=10, choices=CostMode.choices, blank=True, default='')
    seed = models.IntegerField(null=True, blank=True)
    parameters = models.JSONField(default=dict, blank=True)

    # Derived from content on save
    n_vertices = models.PositiveIntegerField(default=0)
    n_edges = models.PositiveIntegerField(default=0)
    root = models.PositiveIntegerField(default=1)
    content = models.TextField(help_text="Instance file text")

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        db_table = 'instance'
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['family', 'n_vertices']),
            models.Index(fields=['name']),
        ]

    def __str__(self):
        return f"{self.name} (n={self.n_vertices}, m={self.n_edges})"

    def to_graph(self):
        return read_instance(self.content)

    def clean(self):
        """Content must parse as a valid instance"""
        try:
            self.to_graph()
        except ValidationError as exc:
            raise ValidationError({'content': exc.messages})

    def save(self, *args, **kwargs):
        graph = self.to_graph()
        self.n_vertices = graph.n
        self.n_edges = graph.m
        self.root = graph.root
        if not self.name:
            self.name = f"instance-n{graph.n}-m{graph.m}"
        super().save(*args, **kwargs)

    @classmethod
    def from_spec(cls, spec: InstanceSpec, name: str = ''):
        """Generate and save an instance"""
        graph = generate(spec)
        return cls.objects.create(
            name=name or instance_id(spec),
            source='GENERATED',
            family=spec.family,
            cost_mode=spec.cost_mode,
            seed=None if spec.family == Family.WINDMILL else spec.seed,
            parameters=spec.parameters(),
            content=write_instance(graph, comments=[parameter_comment(spec)]),
        )
